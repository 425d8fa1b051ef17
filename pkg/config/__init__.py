"""Configuration package: environment-driven settings and fixed constants."""
from config.settings import config, get_config, get_step_budget

__all__ = ['config', 'get_config', 'get_step_budget']
