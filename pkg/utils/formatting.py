"""
Renderers for bracket tables and verification reports (text, LaTeX, CSV, JSON).
"""

import json
from typing import Any, Dict, List, Sequence

import pandas as pd

from algebra.qlie import QuantumLieAlgebra
from algebra.reports import VerificationReport
from algebra.scalars import Scalar
from config.constants import SCHEMA_VERSION


def scalar_to_latex(value: Scalar) -> str:
    """
    LaTeX form of a scalar.

    Examples:
        q^{3/2} -> q^{3/2}
        (q^2 - 1)/(q^2 + 1) -> \\frac{q^{2} - 1}{q^{2} + 1}
    """
    text = value.to_string().replace('*', '')
    if value.is_laurent():
        return text
    top, bottom = _split_fraction(text)
    return f"\\frac{{{top}}}{{{bottom}}}"


def _split_fraction(text: str):
    depth = 0
    for index, char in enumerate(text):
        if char in '({':
            depth += 1
        elif char in ')}':
            depth -= 1
        elif char == '/' and depth == 0:
            return _unwrap(text[:index]), _unwrap(text[index + 1:])
    return text, '1'


def _unwrap(text: str) -> str:
    if text.startswith('(') and text.endswith(')'):
        return text[1:-1]
    return text


def name_to_latex(name: str) -> str:
    """T1 -> T_1, X-12 -> X_{-12}, X+ -> X_+."""
    head, index = name[0], name[1:]
    if len(index) == 1:
        return f"{head}_{index}"
    return f"{head}_{{{index}}}"


def _is_simple_coefficient(text: str) -> bool:
    body = text[1:] if text.startswith('-') else text
    return '+' not in body and '-' not in body.replace('^-', '^') and '/' not in body


def term_to_text(coefficient: Scalar, name: str) -> str:
    text = coefficient.to_string(compact=True)
    if text == '1':
        return name
    if text == '-1':
        return f"-{name}"
    if _is_simple_coefficient(text):
        return f"{text} {name}"
    return f"({text}) {name}"


def element_to_text(coords: Sequence[Scalar], names: Sequence[str]) -> str:
    """'(q+q^-1) X0', '-q^-1 T1 + T2', or '0'."""
    parts = [term_to_text(c, name) for c, name in zip(coords, names) if c]
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
    return text


def element_to_latex(coords: Sequence[Scalar], names: Sequence[str]) -> str:
    parts = []
    for c, name in zip(coords, names):
        if not c:
            continue
        latex_name = name_to_latex(name)
        text = c.to_string()
        if text == '1':
            parts.append(latex_name)
        elif text == '-1':
            parts.append(f"-{latex_name}")
        elif c.is_laurent() and _is_simple_coefficient(text):
            parts.append(f"{scalar_to_latex(c)} {latex_name}")
        else:
            parts.append(f"\\left({scalar_to_latex(c)}\\right) {latex_name}")
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        text += f" - {part[1:]}" if part.startswith('-') else f" + {part}"
    return text


# ----------------------------------------------------------------------
# bracket tables
# ----------------------------------------------------------------------
def bracket_records(qla: QuantumLieAlgebra) -> List[Dict[str, Any]]:
    """One record per ordered basis pair with canonical coefficient strings."""
    records = []
    for i, x in enumerate(qla.names):
        for j, y in enumerate(qla.names):
            value = {name: c.to_string() for name, c in zip(qla.names, qla.beta[i][j]) if c}
            records.append({'x': x, 'y': y, 'value': value})
    return records


def bracket_frame(qla: QuantumLieAlgebra) -> pd.DataFrame:
    """Square table of brackets: rows x, columns y, cells [x, y] as text."""
    data = {
        y: [element_to_text(qla.beta[i][j], qla.names) for i in range(qla.dim)]
        for j, y in enumerate(qla.names)
    }
    frame = pd.DataFrame(data, index=qla.names, columns=qla.names)
    frame.index.name = 'x/y'
    return frame


def render_table_text(qla: QuantumLieAlgebra) -> str:
    lines = []
    for i, x in enumerate(qla.names):
        for j, y in enumerate(qla.names):
            lines.append(f"[{x},{y}] = {element_to_text(qla.beta[i][j], qla.names)}")
    return "\n".join(lines) + "\n"


def render_table_csv(qla: QuantumLieAlgebra) -> str:
    return bracket_frame(qla).to_csv(lineterminator='\n')


def render_table_json(qla: QuantumLieAlgebra) -> str:
    document = {
        'schema_version': SCHEMA_VERSION,
        'n': qla.n,
        'basis': list(qla.names),
        'brackets': bracket_records(qla),
    }
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def _latex_tabular(qla: QuantumLieAlgebra, columns: Sequence[int]) -> str:
    header = " & ".join(["$[\\,\\cdot\\,,\\,\\cdot\\,]$"] + [f"${name_to_latex(qla.names[j])}$" for j in columns])
    lines = [
        "\\begin{tabular}{" + "|c" * (len(columns) + 1) + "|}",
        "\\hline",
        header + " \\\\ \\hline",
    ]
    for i, x in enumerate(qla.names):
        cells = [f"${name_to_latex(x)}$"]
        cells += [f"${element_to_latex(qla.beta[i][j], qla.names)}$" for j in columns]
        lines.append(" & ".join(cells) + " \\\\ \\hline")
    lines.append("\\end{tabular}")
    return "\n".join(lines)


def render_table_latex(qla: QuantumLieAlgebra) -> str:
    """
    Bracket table as LaTeX; rows are the left argument.

    For sl(3) the columns are split over two tabulars, the first holding
    T1, T2, X1, X-1 and the second X2, X-2, X12, X-12.
    """
    columns = list(range(qla.dim))
    if qla.dim > 4:
        half = qla.dim // 2
        blocks = [columns[:half], columns[half:]]
    else:
        blocks = [columns]
    body = "\n\n\\bigskip\n\n".join(_latex_tabular(qla, block) for block in blocks)
    return f"\\begin{{table}}[h!]\n\\centering\n{body}\n\\end{{table}}\n"


TABLE_RENDERERS = {
    'text': render_table_text,
    'csv': render_table_csv,
    'json': render_table_json,
    'latex': render_table_latex,
}


def render_table(qla: QuantumLieAlgebra, fmt: str) -> str:
    return TABLE_RENDERERS[fmt](qla)


# ----------------------------------------------------------------------
# reports
# ----------------------------------------------------------------------
def reports_document(reports: Sequence[VerificationReport], n: int) -> Dict[str, Any]:
    return {
        'schema_version': SCHEMA_VERSION,
        'n': n,
        'passed': all(r.passed for r in reports),
        'suites': [r.to_dict() for r in reports],
    }


def report_frame(reports: Sequence[VerificationReport]) -> pd.DataFrame:
    rows = []
    for report in reports:
        for check in report.checks:
            rows.append({
                'suite': report.title,
                'check': check.name,
                'verdict': check.verdict,
                'asserted': check.asserted,
                'detail': check.detail,
            })
    return pd.DataFrame(rows, columns=['suite', 'check', 'verdict', 'asserted', 'detail'])


def render_reports(reports: Sequence[VerificationReport], n: int, fmt: str) -> str:
    if fmt == 'json':
        return json.dumps(reports_document(reports, n), indent=2, ensure_ascii=False, default=str) + "\n"
    if fmt == 'csv':
        return report_frame(reports).to_csv(index=False, lineterminator='\n')
    if fmt == 'latex':
        frame = report_frame(reports)
        lines = ["\\begin{tabular}{|l|l|l|}", "\\hline", "Suite & Check & Verdict \\\\ \\hline"]
        for row in frame.itertuples(index=False):
            check = row.check.replace('_', '\\_').replace('^', '\\^{}')
            lines.append(f"{row.suite} & {check} & {row.verdict} \\\\ \\hline")
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    return "\n\n".join(str(report) for report in reports) + "\n"
