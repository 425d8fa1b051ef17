"""
Configuration settings for the quantum Lie algebra toolkit.

This module contains configuration classes for different environments
(development, testing, production).
"""
import os
from pathlib import Path

# Base directory
BASE_DIR = Path(__file__).parent.parent.absolute()

DEFAULT_STEP_BUDGET = 1_000_000


class Config:
    """Base configuration class."""

    # Rewriting (QLIE_STEP_BUDGET overrides, see get_step_budget)
    STEP_BUDGET = DEFAULT_STEP_BUDGET

    # Property suites
    SAMPLE_SEED = int(os.environ.get('QLIE_SEED') or 20240517)
    SAMPLE_COUNT = 100
    MAX_SAMPLE_LENGTH = 4

    # Quantum Lie algebra construction
    DIMENSION_CAP = 64
    BRAID_CHECK_MAX_N = 2
    INDEPENDENCE_DEGREE = 5

    # Output
    DEFAULT_FORMAT = 'text'
    OUTPUT_DIR = os.path.join(BASE_DIR, 'reports')
    LOG_LEVEL = os.environ.get('QLIE_LOG_LEVEL', 'INFO')


class DevelopmentConfig(Config):
    """Development configuration."""

    LOG_LEVEL = os.environ.get('QLIE_LOG_LEVEL', 'DEBUG')


class TestingConfig(Config):
    """Testing configuration."""

    LOG_LEVEL = 'WARNING'
    SAMPLE_SEED = 12345


class ProductionConfig(Config):
    """Production configuration."""

    LOG_LEVEL = os.environ.get('QLIE_LOG_LEVEL', 'INFO')


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': ProductionConfig,
}


def get_config(name: str = None):
    """Return the configuration class selected by name or the QLIE_ENV variable."""
    name = name or os.environ.get('QLIE_ENV', 'default')
    return config.get(name, config['default'])


def get_step_budget() -> int:
    """
    Current rewrite step budget.

    Read from QLIE_STEP_BUDGET on every call; callers with an explicit
    budget pass it to make_algebra instead.

    Raises:
        ValidationError: if QLIE_STEP_BUDGET is not a positive integer
    """
    raw = os.environ.get('QLIE_STEP_BUDGET')
    if not raw:
        return DEFAULT_STEP_BUDGET
    # utils.validators imports config.constants
    from utils.validators import ValidationError
    try:
        budget = int(raw)
    except ValueError:
        raise ValidationError('QLIE_STEP_BUDGET', f"must be an integer, got {raw!r}")
    if budget < 1:
        raise ValidationError('QLIE_STEP_BUDGET', f"must be positive, got {budget}")
    return budget
