#!/usr/bin/env python3
"""
Command-line entry point.

    table   --n 2|3 [--format text|csv|json|latex] [--output FILE]
    verify  --n N --checks axioms,sl2,... [--format ...] [--output FILE] [--parallel]
    export  --n N --what TARGET [--format json|csv|text] [--output FILE]

Exit codes: 0 all asserted checks hold, 1 an asserted check failed,
2 usage or configuration error.
"""

import json
import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import click

from algebra.errors import AlgebraError
from algebra.qlie import make_quantum_lie_algebra, mutate_beta
from algebra.reports import VerificationReport
from algebra.suites import run_suite
from config.constants import EXIT_ASSERTION_FAILED, EXIT_OK
from config.settings import get_config, get_step_budget
from utils.formatting import render_reports, render_table
from utils.log import configure_logging
from utils.serialization import ArtifactSerializer, load_rule_file
from utils.validators import RunConfig, RunConfigValidator, ValidationError

logger = logging.getLogger('cli')


def _validate(run: RunConfig) -> None:
    result = RunConfigValidator.validate_run_config(run)
    if not result.is_valid:
        raise click.UsageError("; ".join(result.get_errors()))


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        directory = os.path.dirname(output)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output, 'w', encoding='utf-8') as f:
            f.write(text)
        logger.info("wrote %s", output)
    else:
        click.echo(text, nl=False)


@click.group()
@click.option('--log-level', default=None, help='Logging level for progress messages on stderr.')
def cli(log_level: Optional[str]):
    """Exact computation in U_q(sl n) and its quantum Lie algebras."""
    configure_logging(log_level)
    try:
        get_step_budget()
    except ValidationError as e:
        raise click.UsageError(str(e))


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Rank parameter: 2 or 3.')
@click.option('--format', 'fmt', default=None, help='text, csv, json or latex.')
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Write to FILE instead of stdout.')
@click.option('--step-budget', type=int, default=None, help='Rewrite step budget per reduction.')
def table(n: int, fmt: Optional[str], output: Optional[str], step_budget: Optional[int]):
    """Print the bracket table of the quantum Lie algebra for sl(n)."""
    run = RunConfig('table', n, format=fmt or get_config().DEFAULT_FORMAT, output=output, step_budget=step_budget)
    _validate(run)
    try:
        qla = make_quantum_lie_algebra(n, run.step_budget)
    except AlgebraError as e:
        raise click.ClickException(str(e))
    _emit(render_table(qla, run.format), output)


def _run_suites(run: RunConfig, extra_rules) -> List[VerificationReport]:
    qla = None
    if run.mutate_beta is not None and 'axioms' in run.checks:
        i, j, k = run.mutate_beta
        qla = mutate_beta(make_quantum_lie_algebra(run.n, run.step_budget), i, j, k)
        logger.warning("beta[%d][%d][%d] mutated for a negative-control run", i, j, k)

    def one(name: str) -> VerificationReport:
        try:
            return run_suite(name, run.n, qla if name == 'axioms' else None, extra_rules,
                             max_workers=4 if run.parallel else None, step_budget=run.step_budget)
        except AlgebraError as e:
            report = VerificationReport(name)
            report.record(type(e).__name__, False, detail=str(e),
                          witness={'witness': str(e.witness)} if e.witness is not None else None)
            return report

    if run.parallel and len(run.checks) > 1:
        with ThreadPoolExecutor(max_workers=len(run.checks)) as pool:
            return list(pool.map(one, run.checks))
    return [one(name) for name in run.checks]


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Rank parameter: 2, 3 or 4.')
@click.option('--checks', default='axioms', show_default=True,
              help='Comma-separated: axioms, k-relations, sl2, sl3, confluence, hopf.')
@click.option('--format', 'fmt', default=None, help='text, csv, json or latex.')
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Write the report to FILE.')
@click.option('--step-budget', type=int, default=None, help='Rewrite step budget per reduction.')
@click.option('--parallel', is_flag=True, help='Run independent suites in a thread pool.')
@click.option('--rules', 'rules_file', type=click.Path(exists=True, dir_okay=False), default=None,
              help='Extra rule set (JSON) for the confluence check.')
@click.option('--mutate-beta', 'mutation_spec', default=None, hidden=True)
@click.pass_context
def verify(ctx, n: int, checks: str, fmt: Optional[str], output: Optional[str], step_budget: Optional[int],
           parallel: bool, rules_file: Optional[str], mutation_spec: Optional[str]):
    """Run verification suites; exit 1 if an asserted check fails."""
    try:
        mutation = RunConfigValidator.parse_mutation(mutation_spec)
    except ValidationError as e:
        raise click.UsageError(str(e))
    run = RunConfig('verify', n, RunConfigValidator.parse_checks(checks), fmt or get_config().DEFAULT_FORMAT,
                    output, step_budget, parallel, rules=rules_file, mutate_beta=mutation)
    _validate(run)

    extra_rules = []
    if rules_file:
        try:
            extra_rules.append((os.path.basename(rules_file), load_rule_file(rules_file)))
        except (ValueError, KeyError, json.JSONDecodeError, AlgebraError) as e:
            raise click.UsageError(f"cannot load rule file {rules_file}: {e}")

    reports = _run_suites(run, extra_rules)
    _emit(render_reports(reports, n, run.format), output)
    passed = all(report.passed for report in reports)
    logger.info("verification %s", "passed" if passed else "FAILED")
    ctx.exit(EXIT_OK if passed else EXIT_ASSERTION_FAILED)


@cli.command()
@click.option('--n', 'n', type=int, required=True, help='Rank parameter.')
@click.option('--what', required=True, help='basis, central-element, sigma, gamma, highest-weights or rules.')
@click.option('--format', 'fmt', default='json', show_default=True, help='json, csv or text.')
@click.option('--output', type=click.Path(dir_okay=False), default=None, help='Write to FILE instead of stdout.')
@click.option('--step-budget', type=int, default=None, help='Rewrite step budget per reduction.')
def export(n: int, what: str, fmt: str, output: Optional[str], step_budget: Optional[int]):
    """Serialise a computed object."""
    run = RunConfig('export', n, format=fmt, output=output, step_budget=step_budget, what=what)
    _validate(run)
    try:
        serializer = ArtifactSerializer(n, run.step_budget)
        if output:
            success, message = serializer.export(what, fmt, output)
            if not success:
                raise click.ClickException(message)
            click.echo(message, err=True)
        else:
            click.echo(serializer.render(what, fmt), nl=False)
    except AlgebraError as e:
        raise click.ClickException(str(e))


def main():
    cli()


if __name__ == "__main__":
    main()
