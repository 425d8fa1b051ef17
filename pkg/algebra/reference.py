"""
Published structure constants for the sl2 and sl3 quantum Lie algebras.

Elements are {basis name: Scalar}; tensors are {(name, name): Scalar}.
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple

from algebra.scalars import ONE, Q, Q_INV, ZERO, Scalar, q_power

Element = Dict[str, Scalar]
Tensor = Dict[Tuple[str, str], Scalar]


def q(exponent) -> Scalar:
    return q_power(Fraction(exponent))


Q2 = Q + Q_INV
D = Q * Q - ONE + Q_INV * Q_INV
H = Fraction(1, 2)

# ----------------------------------------------------------------------
# sl2, basis (X+, X-, X0)
# ----------------------------------------------------------------------
SL2_BRACKETS: Dict[Tuple[str, str], Element] = {
    ('X+', 'X+'): {},
    ('X+', 'X0'): {'X+': -Q_INV},
    ('X+', 'X-'): {'X0': Q2},
    ('X0', 'X+'): {'X+': Q},
    ('X0', 'X0'): {'X0': Q - Q_INV},
    ('X0', 'X-'): {'X-': -Q_INV},
    ('X-', 'X+'): {'X0': -Q2},
    ('X-', 'X0'): {'X-': Q},
    ('X-', 'X-'): {},
}

# (1 - sigma) on the sl2 tensor basis; X0 (x) X0 is not listed
_PLUS_MINUS = {('X+', 'X-'): ONE, ('X-', 'X+'): -ONE, ('X0', 'X0'): q(2) - q(-2)}
SL2_GAMMA_PRIME: Dict[Tuple[str, str], Tensor] = {
    ('X+', 'X+'): {},
    ('X-', 'X-'): {},
    ('X+', 'X0'): {('X+', 'X0'): q(-2), ('X0', 'X+'): -ONE},
    ('X-', 'X0'): {('X-', 'X0'): q(2), ('X0', 'X-'): -ONE},
    ('X0', 'X+'): {('X0', 'X+'): q(2), ('X+', 'X0'): -ONE},
    ('X0', 'X-'): {('X0', 'X-'): q(-2), ('X-', 'X0'): -ONE},
    ('X+', 'X-'): dict(_PLUS_MINUS),
    ('X-', 'X+'): {k: -c for k, c in _PLUS_MINUS.items()},
}

# ----------------------------------------------------------------------
# sl3, basis (T1, T2, X1, X-1, X2, X-2, X12, X-12), lambda = omega_1
# ----------------------------------------------------------------------
_A = q(2) + q(-2)

SL3_BRACKETS: Dict[Tuple[str, str], Element] = {
    ('T1', 'T1'): {'T1': -(q(2) - q(-2))},
    ('T1', 'T2'): {'T1': -(Q - Q_INV)},
    ('T1', 'X1'): {'X1': -Q * Q2},
    ('T1', 'X-1'): {'X-1': Q_INV * Q2},
    ('T1', 'X2'): {'X2': q(-2)},
    ('T1', 'X-2'): {'X-2': -q(2)},
    ('T1', 'X12'): {'X12': -ONE},
    ('T1', 'X-12'): {'X-12': ONE},

    ('T2', 'T1'): {'T1': -(Q - Q_INV)},
    ('T2', 'T2'): {'T1': -(q(2) - q(-2)), 'T2': q(3) - q(-3)},
    ('T2', 'X1'): {'X1': -Q},
    ('T2', 'X-1'): {'X-1': Q_INV},
    ('T2', 'X2'): {'X2': Q * _A},
    ('T2', 'X-2'): {'X-2': -Q_INV * _A},
    ('T2', 'X12'): {'X12': q(3)},
    ('T2', 'X-12'): {'X-12': -q(-3)},

    ('X1', 'T1'): {'X1': Q_INV * Q2},
    ('X1', 'T2'): {'X1': Q_INV},
    ('X1', 'X1'): {},
    ('X1', 'X-1'): {'T1': ONE},
    ('X1', 'X2'): {'X12': q(-3 * H)},
    ('X1', 'X-2'): {},
    ('X1', 'X12'): {},
    ('X1', 'X-12'): {'X-2': q(H)},

    ('X-1', 'T1'): {'X-1': -Q * Q2},
    ('X-1', 'T2'): {'X-1': -Q},
    ('X-1', 'X1'): {'T1': -ONE},
    ('X-1', 'X-1'): {},
    ('X-1', 'X2'): {},
    ('X-1', 'X-2'): {'X-12': -q(3 * H)},
    ('X-1', 'X12'): {'X2': -q(-H)},
    ('X-1', 'X-12'): {},

    ('X2', 'T1'): {'X2': -q(2)},
    ('X2', 'T2'): {'X2': -Q_INV * _A},
    ('X2', 'X1'): {'X12': -q(3 * H)},
    ('X2', 'X-1'): {},
    ('X2', 'X2'): {},
    ('X2', 'X-2'): {'T1': Q_INV * (Q - Q_INV), 'T2': -Q},
    ('X2', 'X12'): {},
    ('X2', 'X-12'): {'X-1': -q(-5 * H)},

    ('X-2', 'T1'): {'X-2': q(-2)},
    ('X-2', 'T2'): {'X-2': Q * _A},
    ('X-2', 'X1'): {},
    ('X-2', 'X-1'): {'X-12': q(-3 * H)},
    ('X-2', 'X2'): {'T1': Q * (Q - Q_INV), 'T2': Q_INV},
    ('X-2', 'X-2'): {},
    ('X-2', 'X12'): {'X1': q(5 * H)},
    ('X-2', 'X-12'): {},

    ('X12', 'T1'): {'X12': ONE},
    ('X12', 'T2'): {'X12': -q(-3)},
    ('X12', 'X1'): {},
    ('X12', 'X-1'): {'X2': q(H)},
    ('X12', 'X2'): {},
    ('X12', 'X-2'): {'X1': -q(-5 * H)},
    ('X12', 'X12'): {},
    ('X12', 'X-12'): {'T1': -Q_INV, 'T2': ONE},

    ('X-12', 'T1'): {'X-12': -ONE},
    ('X-12', 'T2'): {'X-12': q(3)},
    ('X-12', 'X1'): {'X-2': -q(-H)},
    ('X-12', 'X-1'): {},
    ('X-12', 'X2'): {'X-1': q(5 * H)},
    ('X-12', 'X-2'): {},
    ('X-12', 'X12'): {'T1': Q, 'T2': -ONE},
    ('X-12', 'X-12'): {},
}

# Z^2-grades of the root vectors of L
SL3_GRADES: Dict[str, Tuple[int, int]] = {
    'X1': (1, 0), 'X-1': (-1, 0),
    'X2': (0, 1), 'X-2': (0, -1),
    'X12': (1, 1), 'X-12': (-1, -1),
}
_BY_GRADE = {grade: name for name, grade in SL3_GRADES.items()}


def sl3_expected_ad(kind: str, i: int, name: str) -> Element:
    """
    ad E_i or ad F_i applied to a basis element of the sl3 algebra.

    Args:
        kind: 'E' or 'F'
        i: 1 or 2
        name: basis name

    Returns:
        The image as a name-keyed element
    """
    sign = 1 if kind == 'E' else -1
    if name in ('T1', 'T2'):
        target = f"X{i}" if kind == 'E' else f"X-{i}"
        return {target: Q2 if name == f"T{i}" else ONE}
    grade = list(SL3_GRADES[name])
    grade[i - 1] += sign
    grade = tuple(grade)
    if grade == (0, 0):
        return {f"T{i}": ONE}
    target: Optional[str] = _BY_GRADE.get(grade)
    return {target: ONE} if target else {}


# ----------------------------------------------------------------------
# sl3 highest-weight vectors in L (x) L
# ----------------------------------------------------------------------
_S = q(2) + ONE + q(-2)

SL3_HIGHEST_WEIGHT: Dict[str, Tensor] = {
    'W27': {('X12', 'X12'): ONE},
    'W10': {('X1', 'X12'): q(H), ('X12', 'X1'): -q(-H)},
    'W10*': {('X2', 'X12'): q(H), ('X12', 'X2'): -q(-H)},
    'W8s': {
        ('X1', 'X2'): q(7 * H) + q(3 * H) + q(-5 * H),
        ('X2', 'X1'): q(5 * H) + q(-3 * H) + q(-7 * H),
        ('T1', 'X12'): -q(4),
        ('T2', 'X12'): -Q_INV,
        ('X12', 'T1'): -q(-4),
        ('X12', 'T2'): -Q,
    },
    'W8a': {
        ('X1', 'X2'): q(3 * H),
        ('X2', 'X1'): -q(-3 * H),
        ('T1', 'X12'): -q(2),
        ('T2', 'X12'): Q,
        ('X12', 'T1'): q(-2),
        ('X12', 'T2'): -Q_INV,
    },
    'W1': {
        ('T1', 'T2'): ONE,
        ('T2', 'T1'): ONE,
        ('T1', 'T1'): -Q2,
        ('T2', 'T2'): -Q2,
        ('X1', 'X-1'): _S * Q_INV,
        ('X-1', 'X1'): _S * Q,
        ('X2', 'X-2'): _S * Q_INV,
        ('X-2', 'X2'): _S * Q,
        ('X12', 'X-12'): -_S * q(-2),
        ('X-12', 'X12'): -_S * q(2),
    },
}

# grade (simple-root coordinates) of each vector; W27, W10, W10*, W8 and W1 have
# highest weights 2(w1 + w2), 3w1, 3w2, w1 + w2 and 0
SL3_HIGHEST_WEIGHT_GRADES: Dict[str, Tuple[int, int]] = {
    'W27': (2, 2),
    'W10': (2, 1),
    'W10*': (1, 2),
    'W8s': (1, 1),
    'W8a': (1, 1),
    'W1': (0, 0),
}

SL3_GAMMA_EIGENVALUES: Dict[str, Scalar] = {
    'W27': ZERO,
    'W10': (ONE + q(-2)) / D,
    'W10*': (q(2) + ONE) / D,
    'W8a': (q(2) + q(-2)) / D,
    'W8s': ZERO,
    'W1': ZERO,
}

# scalar relating the q-deformed X12 to ad E1 ad E2 (q^(-4 w2)) / (q - q^-1)
SL3_X12_STAR_SCALAR = (q(H) + q(-H)) * _S
