"""Exact computation in U_q(sl n) and its quantum Lie algebras."""

from algebra.errors import (
    AlgebraError,
    BracketEscapesError,
    ClassicalLimitPoleError,
    CoidealError,
    IndexRangeError,
    NonConfluentPresetError,
    OrbitOverflowError,
    RuleOrderError,
    ScalarParseError,
    SplitError,
    StepBudgetExceeded,
    UnsupportedRankError,
    ZeroDenominatorError
)
from algebra.linalg import CoordinateSystem, coordinates, kernel, row_reduce
from algebra.qlie import (
    QuantumLieAlgebra,
    bracket_table,
    build_Lbar,
    build_quantum_lie_algebra,
    gamma_matrix,
    make_quantum_lie_algebra,
    sigma_matrix,
    split_L,
    verify_axioms
)
from algebra.reports import CheckResult, VerificationReport
from algebra.rewrite import FreeElement, RewriteRule, RewriteSystem, TermOrder, check_confluence
from algebra.scalars import Scalar, parse_scalar, q_number
from algebra.suites import hopf_suite, sl2_suite, sl3_suite, y_relations
from algebra.uq import AlgebraElement, QuantumGroup, TensorElement, make_algebra

__all__ = [
    'AlgebraError',
    'BracketEscapesError',
    'ClassicalLimitPoleError',
    'CoidealError',
    'IndexRangeError',
    'NonConfluentPresetError',
    'OrbitOverflowError',
    'RuleOrderError',
    'ScalarParseError',
    'SplitError',
    'StepBudgetExceeded',
    'UnsupportedRankError',
    'ZeroDenominatorError',
    'CoordinateSystem',
    'coordinates',
    'kernel',
    'row_reduce',
    'QuantumLieAlgebra',
    'bracket_table',
    'build_Lbar',
    'build_quantum_lie_algebra',
    'gamma_matrix',
    'make_quantum_lie_algebra',
    'sigma_matrix',
    'split_L',
    'verify_axioms',
    'CheckResult',
    'VerificationReport',
    'FreeElement',
    'RewriteRule',
    'RewriteSystem',
    'TermOrder',
    'check_confluence',
    'Scalar',
    'parse_scalar',
    'q_number',
    'hopf_suite',
    'sl2_suite',
    'sl3_suite',
    'y_relations',
    'AlgebraElement',
    'QuantumGroup',
    'TensorElement',
    'make_algebra'
]
