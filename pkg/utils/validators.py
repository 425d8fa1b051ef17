"""
Input validation for command-line runs.

Every user-supplied option is checked here before any algebra is built, so
bad input never costs a rule-generation pass.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from config.constants import (CHECK_NAMES, EXPORT_FORMATS, EXPORT_TARGETS, OUTPUT_FORMATS, SL2_BASIS,
                              SL3_BASIS, SUPPORTED_RANKS, TABLE_RANKS)


class ValidationError(Exception):
    """Custom exception for validation errors."""
    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__(f"{field}: {message}")


class ValidationResult:
    """Result of a validation operation."""

    def __init__(self):
        self.is_valid = True
        self.errors: List[Tuple[str, str]] = []  # List of (field, message) tuples

    def add_error(self, field: str, message: str):
        """Add a validation error."""
        self.is_valid = False
        self.errors.append((field, message))

    def extend(self, other: "ValidationResult"):
        for field_name, message in other.errors:
            self.add_error(field_name, message)

    def get_errors(self) -> List[str]:
        """Get formatted error messages."""
        return [f"{field}: {message}" for field, message in self.errors]

    def get_error_dict(self) -> Dict[str, List[str]]:
        """Get errors grouped by field."""
        error_dict = {}
        for field, message in self.errors:
            if field not in error_dict:
                error_dict[field] = []
            error_dict[field].append(message)
        return error_dict

    def raise_first(self):
        """Raise the first error as a ValidationError."""
        if self.errors:
            raise ValidationError(*self.errors[0])


@dataclass
class RunConfig:
    """One CLI invocation."""

    command: str
    n: int
    checks: List[str] = field(default_factory=list)
    format: str = 'text'
    output: Optional[str] = None
    step_budget: Optional[int] = None
    parallel: bool = False
    what: Optional[str] = None
    rules: Optional[str] = None
    mutate_beta: Optional[Tuple[int, int, int]] = None


class RunConfigValidator:
    """Validator for RunConfig fields."""

    VALID_COMMANDS = ['table', 'verify', 'export']
    MIN_STEP_BUDGET = 1

    @staticmethod
    def validate_n(n: int, command: str) -> ValidationResult:
        """
        Validate the rank.

        Rules:
        - table needs n in TABLE_RANKS
        - everything else needs n in SUPPORTED_RANKS
        """
        result = ValidationResult()
        allowed = TABLE_RANKS if command == 'table' else SUPPORTED_RANKS
        if n not in allowed:
            result.add_error("n", f"{command} supports n in {', '.join(map(str, allowed))}, got {n}")
        return result

    @staticmethod
    def parse_checks(raw: str) -> List[str]:
        return [name.strip() for name in (raw or '').split(',') if name.strip()]

    @staticmethod
    def validate_checks(checks: List[str]) -> ValidationResult:
        result = ValidationResult()
        if not checks:
            result.add_error("checks", "at least one check is required")
        for name in checks:
            if name not in CHECK_NAMES:
                result.add_error("checks", f"unknown check '{name}'; choose from {', '.join(CHECK_NAMES)}")
        return result

    @staticmethod
    def validate_format(fmt: str, command: str) -> ValidationResult:
        result = ValidationResult()
        allowed = EXPORT_FORMATS if command == 'export' else OUTPUT_FORMATS
        if fmt not in allowed:
            result.add_error("format", f"{command} supports formats {', '.join(allowed)}, got '{fmt}'")
        return result

    @staticmethod
    def validate_target(what: Optional[str], n: int) -> ValidationResult:
        result = ValidationResult()
        if what not in EXPORT_TARGETS:
            result.add_error("what", f"unknown export target '{what}'; choose from {', '.join(EXPORT_TARGETS)}")
        elif what == 'highest-weights' and n != 3:
            result.add_error("what", "highest-weights is available for n = 3 only")
        elif what in ('basis', 'central-element', 'sigma', 'gamma') and n not in TABLE_RANKS:
            result.add_error("what", f"{what} is exported for n in {', '.join(map(str, TABLE_RANKS))}")
        return result

    @staticmethod
    def validate_step_budget(budget: Optional[int]) -> ValidationResult:
        result = ValidationResult()
        if budget is not None and budget < RunConfigValidator.MIN_STEP_BUDGET:
            result.add_error("step-budget", "must be a positive integer")
        return result

    @staticmethod
    def parse_mutation(raw: Optional[str]) -> Optional[Tuple[int, int, int]]:
        """'I,J,K' -> (I, J, K); raises ValidationError on malformed input."""
        if not raw:
            return None
        parts = raw.split(',')
        if len(parts) != 3:
            raise ValidationError("mutate-beta", "expected three comma-separated indices I,J,K")
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ValidationError("mutate-beta", "indices must be integers")

    @staticmethod
    def validate_mutation(mutation: Optional[Tuple[int, int, int]], n: int) -> ValidationResult:
        result = ValidationResult()
        if mutation is None:
            return result
        size = {2: len(SL2_BASIS), 3: len(SL3_BASIS)}.get(n, n * n - 1)
        if any(not 0 <= index < size for index in mutation):
            result.add_error("mutate-beta", f"indices must lie in 0..{size - 1}")
        return result

    @staticmethod
    def validate_run_config(config: RunConfig) -> ValidationResult:
        """
        Validate a complete RunConfig.

        Performs all validations relevant to the command.
        """
        result = ValidationResult()
        if config.command not in RunConfigValidator.VALID_COMMANDS:
            result.add_error("command", f"unknown command '{config.command}'")
            return result

        result.extend(RunConfigValidator.validate_n(config.n, config.command))
        result.extend(RunConfigValidator.validate_format(config.format, config.command))
        result.extend(RunConfigValidator.validate_step_budget(config.step_budget))
        if config.command == 'verify':
            result.extend(RunConfigValidator.validate_checks(config.checks))
            result.extend(RunConfigValidator.validate_mutation(config.mutate_beta, config.n))
        if config.command == 'export':
            result.extend(RunConfigValidator.validate_target(config.what, config.n))
        return result
