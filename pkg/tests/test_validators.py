"""
Test Validators

Tests for command-line input validation.
"""
import pytest

from config.settings import DEFAULT_STEP_BUDGET, get_step_budget
from utils.validators import RunConfig, RunConfigValidator, ValidationError, ValidationResult


class TestValidationResult:
    """Error collection."""

    def test_collects_errors(self):
        """Test add_error, extend and the grouped view."""
        result = ValidationResult()
        other = ValidationResult()
        other.add_error("n", "bad rank")
        result.extend(other)
        result.add_error("n", "still bad")
        assert not result.is_valid
        assert result.get_errors() == ["n: bad rank", "n: still bad"]
        assert result.get_error_dict() == {"n": ["bad rank", "still bad"]}

    def test_raise_first(self):
        """Test that raise_first raises the first error."""
        result = ValidationResult()
        result.add_error("format", "unknown")
        with pytest.raises(ValidationError, match="format: unknown"):
            result.raise_first()


class TestRunConfigValidator:
    """Per-command rules."""

    def test_valid_verify(self):
        """Test a complete valid verify run."""
        run = RunConfig('verify', 3, ['axioms', 'sl3'], 'json')
        assert RunConfigValidator.validate_run_config(run).is_valid

    @pytest.mark.parametrize('command,n,valid', [
        ('table', 2, True),
        ('table', 3, True),
        ('table', 4, False),
        ('verify', 4, True),
        ('verify', 5, False),
        ('export', 1, False),
    ])
    def test_rank_rules(self, command, n, valid):
        """Test which ranks each command accepts."""
        assert RunConfigValidator.validate_n(n, command).is_valid is valid

    def test_parse_checks(self):
        """Test comma splitting with blanks."""
        assert RunConfigValidator.parse_checks(" axioms, hopf ,,") == ['axioms', 'hopf']
        assert RunConfigValidator.parse_checks("") == []

    def test_empty_checks(self):
        """Test that at least one check is required."""
        assert not RunConfigValidator.validate_checks([]).is_valid

    def test_export_targets(self):
        """Test target restrictions by rank."""
        assert RunConfigValidator.validate_target('rules', 4).is_valid
        assert not RunConfigValidator.validate_target('sigma', 4).is_valid
        assert not RunConfigValidator.validate_target('highest-weights', 2).is_valid
        assert RunConfigValidator.validate_target('highest-weights', 3).is_valid
        assert not RunConfigValidator.validate_target(None, 2).is_valid

    def test_mutation(self):
        """Test mutation parsing and index ranges."""
        assert RunConfigValidator.parse_mutation(None) is None
        assert RunConfigValidator.parse_mutation("0,1,2") == (0, 1, 2)
        with pytest.raises(ValidationError):
            RunConfigValidator.parse_mutation("0,x,2")
        assert RunConfigValidator.validate_mutation((0, 1, 2), 2).is_valid
        assert not RunConfigValidator.validate_mutation((0, 1, 3), 2).is_valid
        assert RunConfigValidator.validate_mutation((7, 7, 7), 3).is_valid

    def test_unknown_command(self):
        """Test an unknown command name."""
        result = RunConfigValidator.validate_run_config(RunConfig('plot', 2))
        assert result.get_error_dict() == {"command": ["unknown command 'plot'"]}


class TestStepBudgetSetting:
    """QLIE_STEP_BUDGET parsing."""

    def test_default(self, monkeypatch):
        """Test the built-in budget when the variable is unset."""
        monkeypatch.delenv('QLIE_STEP_BUDGET', raising=False)
        assert get_step_budget() == DEFAULT_STEP_BUDGET

    def test_override(self, monkeypatch):
        """Test an integer override."""
        monkeypatch.setenv('QLIE_STEP_BUDGET', '250')
        assert get_step_budget() == 250

    @pytest.mark.parametrize('raw', ['lots', '0', '-3'])
    def test_invalid(self, monkeypatch, raw):
        """Test that a non-positive or non-integer value raises ValidationError."""
        monkeypatch.setenv('QLIE_STEP_BUDGET', raw)
        with pytest.raises(ValidationError) as excinfo:
            get_step_budget()
        assert excinfo.value.field == 'QLIE_STEP_BUDGET'
