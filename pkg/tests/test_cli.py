"""
Test Command Line

Tests for the table, verify and export commands and their exit codes.
"""
import json
import os

import pytest
from click.testing import CliRunner

from algebra.uq import make_algebra
from cli import cli


@pytest.fixture
def runner():
    """Click test runner."""
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, ['--log-level', 'WARNING', *args])


class TestTableCommand:
    """table --n N."""

    def test_text_table(self, runner):
        """Test the sl2 table in text form."""
        result = invoke(runner, 'table', '--n', '2')
        assert result.exit_code == 0, result.output
        assert "[X+,X-] = (q+q^-1) X0" in result.output
        assert "[X+,X0] = -q^-1 X+" in result.output
        assert "[X+,X+] = 0" in result.output
        assert len(result.output.strip().splitlines()) == 9

    def test_json_table(self, runner, tmp_path):
        """Test JSON output written to a file."""
        path = tmp_path / 'table.json'
        result = invoke(runner, 'table', '--n', '2', '--format', 'json', '--output', str(path))
        assert result.exit_code == 0, result.output
        document = json.loads(path.read_text())
        assert document['basis'] == ['X+', 'X-', 'X0']
        assert len(document['brackets']) == 9
        entry = next(b for b in document['brackets'] if b['x'] == 'X+' and b['y'] == 'X-')
        assert entry['value'] == {'X0': 'q + q^{-1}'}

    def test_csv_table(self, runner):
        """Test the CSV grid."""
        result = invoke(runner, 'table', '--n', '2', '--format', 'csv')
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "x/y,X+,X-,X0"

    def test_latex_table(self, runner):
        """Test the LaTeX table."""
        result = invoke(runner, 'table', '--n', '2', '--format', 'latex')
        assert result.exit_code == 0
        assert "\\begin{tabular}" in result.output
        assert "X_+" in result.output

    @pytest.mark.slow
    def test_latex_table_sl3(self, runner):
        """Test that the sl3 table uses subscripted names."""
        result = invoke(runner, 'table', '--n', '3', '--format', 'latex')
        assert result.exit_code == 0
        assert "T_1" in result.output
        assert "X_{-12}" in result.output

    def test_unsupported_rank(self, runner):
        """Test that n = 5 is a usage error."""
        result = invoke(runner, 'table', '--n', '5')
        assert result.exit_code == 2

    def test_table_rank_four_refused(self, runner):
        """Test that tables are only printed for n = 2, 3."""
        result = invoke(runner, 'table', '--n', '4')
        assert result.exit_code == 2

    def test_bad_format(self, runner):
        """Test an unknown format."""
        result = invoke(runner, 'table', '--n', '2', '--format', 'xml')
        assert result.exit_code == 2


class TestVerifyCommand:
    """verify --n N --checks ..."""

    def test_axioms_pass(self, runner):
        """Test the default axioms check for sl2."""
        result = invoke(runner, 'verify', '--n', '2')
        assert result.exit_code == 0, result.output
        assert "axioms sl(2): PASS" in result.output

    def test_several_checks_json(self, runner, tmp_path):
        """Test two suites with a JSON report."""
        path = tmp_path / 'report.json'
        result = invoke(runner, 'verify', '--n', '2', '--checks', 'axioms,k-relations',
                        '--format', 'json', '--output', str(path))
        assert result.exit_code == 0, result.output
        document = json.loads(path.read_text())
        assert document['passed'] is True
        assert [s['title'] for s in document['suites']] == ['axioms sl(2)', 'k-relations sl(2)']

    def test_unknown_check(self, runner):
        """Test that an unknown check is a usage error."""
        result = invoke(runner, 'verify', '--n', '2', '--checks', 'axioms,bogus')
        assert result.exit_code == 2
        assert "bogus" in result.output

    def test_mutated_beta_exits_one(self, runner):
        """Test that a corrupted structure constant fails the run."""
        result = invoke(runner, 'verify', '--n', '2', '--checks', 'axioms', '--mutate-beta', '0,1,2')
        assert result.exit_code == 1
        assert "FAIL" in result.output

    def test_malformed_mutation(self, runner):
        """Test that a malformed mutation is a usage error."""
        result = invoke(runner, 'verify', '--n', '2', '--mutate-beta', '0,1')
        assert result.exit_code == 2

    def test_bad_step_budget(self, runner):
        """Test that a zero budget is refused."""
        result = invoke(runner, 'verify', '--n', '2', '--step-budget', '0')
        assert result.exit_code == 2

    def test_step_budget_passed_explicitly(self, runner, monkeypatch):
        """Test that --step-budget reaches the algebra without touching the environment."""
        monkeypatch.delenv('QLIE_STEP_BUDGET', raising=False)
        result = invoke(runner, 'verify', '--n', '2', '--step-budget', '500000')
        assert result.exit_code == 0, result.output
        assert 'QLIE_STEP_BUDGET' not in os.environ
        assert make_algebra(2, 500000).rules.step_budget == 500000

    def test_bad_environment_budget(self, runner, monkeypatch):
        """Test that a malformed QLIE_STEP_BUDGET is a usage error."""
        monkeypatch.setenv('QLIE_STEP_BUDGET', 'lots')
        result = invoke(runner, 'table', '--n', '2')
        assert result.exit_code == 2
        assert "QLIE_STEP_BUDGET" in result.output

    def test_extra_rule_file(self, runner, tmp_path):
        """Test confluence on a user rule file that does not resolve."""
        from algebra.rewrite import system_to_dict
        from algebra.suites import y_relations
        path = tmp_path / 'rules.json'
        path.write_text(json.dumps(system_to_dict(y_relations(mutated=True))))
        result = invoke(runner, 'verify', '--n', '2', '--checks', 'confluence', '--rules', str(path))
        assert result.exit_code == 1
        assert "rules.json confluent: fails" in result.output


class TestExportCommand:
    """export --n N --what TARGET."""

    def test_central_element_json(self, runner, tmp_path):
        """Test exporting C for sl2."""
        path = tmp_path / 'c.json'
        result = invoke(runner, 'export', '--n', '2', '--what', 'central-element', '--output', str(path))
        assert result.exit_code == 0, result.output
        document = json.loads(path.read_text())
        assert document['what'] == 'central-element'
        assert document['n'] == 2
        assert document['element']

    def test_rules_csv(self, runner):
        """Test the rule listing as CSV on stdout."""
        result = invoke(runner, 'export', '--n', '2', '--what', 'rules', '--format', 'csv')
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "name,lhs,rhs"

    def test_highest_weights_need_sl3(self, runner):
        """Test that highest-weight vectors are only exported for n = 3."""
        result = invoke(runner, 'export', '--n', '2', '--what', 'highest-weights')
        assert result.exit_code == 2

    def test_latex_not_an_export_format(self, runner):
        """Test that export refuses latex."""
        result = invoke(runner, 'export', '--n', '2', '--what', 'sigma', '--format', 'latex')
        assert result.exit_code == 2
