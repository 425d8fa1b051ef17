"""
Exception types raised by the algebra package.
"""

from typing import Any, Optional


class AlgebraError(Exception):
    """Base class for every failure raised by the algebra package."""

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.message = message
        self.witness = witness
        super().__init__(message)


# Scalars
class ZeroDenominatorError(AlgebraError, ZeroDivisionError):
    """Division by the zero polynomial."""


class ClassicalLimitPoleError(AlgebraError):
    """A scalar has a pole at v = 1."""


class ScalarParseError(AlgebraError, ValueError):
    """A scalar string does not follow the canonical syntax."""


# Rewriting
class RuleOrderError(AlgebraError):
    """A rule's right-hand side is not strictly below its left-hand side."""


class StepBudgetExceeded(AlgebraError):
    """Reduction did not terminate within the configured number of steps."""


# U_q(sl n)
class UnsupportedRankError(AlgebraError, ValueError):
    pass


class NonConfluentPresetError(AlgebraError):
    pass


class IndexRangeError(AlgebraError, ValueError):
    pass


# Quantum Lie algebras
class OrbitOverflowError(AlgebraError):
    """The ad-orbit did not stabilise below the dimension cap."""


class SplitError(AlgebraError):
    """L-bar could not be split as K.C plus an ad-stable complement."""


class BracketEscapesError(AlgebraError):
    """A bracket of basis elements is not in the span of the basis."""


class CoidealError(AlgebraError):
    """A coproduct slot falls outside L-bar or the C-component is wrong."""
