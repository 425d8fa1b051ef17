"""
Exact arithmetic in the field Q(v), v = q^(1/2).

A Scalar is stored as v^shift * num / den where num and den are integer
polynomials in v (sympy ``PolyElement`` over ZZ), neither divisible by v,
with gcd(num, den) = 1 and a positive leading coefficient on den. That
triple is unique for each field element, so equality is field-wise.
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from algebra.errors import ClassicalLimitPoleError, ScalarParseError, ZeroDenominatorError

# Polynomial ring Z[v]
POLY_RING, V_GEN = ring("v", ZZ)

Number = Union["Scalar", int, Fraction]


def _poly_from_exponents(coeffs: Dict[int, int]):
    return POLY_RING.from_dict({(e,): c for e, c in coeffs.items() if c})


def _shift_poly(p, k: int):
    if k == 0 or not p:
        return p
    return POLY_RING.from_dict({(e + k,): c for (e,), c in p.items()})


def _strip_v(p) -> Tuple[object, int]:
    """Divide out the largest power of v; returns (quotient, exponent)."""
    low = min(e for (e,) in p.keys())
    return _shift_poly(p, -low), low


def _reverse_poly(p):
    top = p.degree()
    return POLY_RING.from_dict({(top - e,): c for (e,), c in p.items()})


def _as_poly(value):
    if isinstance(value, int):
        return POLY_RING(value)
    return value


class Scalar:
    """An element of Q(v) in canonical form."""

    __slots__ = ('num', 'den', 'shift', '_hash')

    def __init__(self, num, den, shift: int):
        # callers guarantee canonical form; use normalize() otherwise
        self.num = num
        self.den = den
        self.shift = shift if num else 0
        self._hash = None

    # ------------------------------------------------------------------
    # predicates
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        """True when the denominator is 1."""
        return self.den == POLY_RING.one

    def is_monomial(self) -> bool:
        """True for +-v^k."""
        return self.is_laurent() and len(self.num) == 1 and abs(int(self.num.LC)) == 1

    def __bool__(self) -> bool:
        return bool(self.num)

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------
    def __add__(self, other: Number) -> "Scalar":
        other = as_scalar(other)
        if not self.num:
            return other
        if not other.num:
            return self
        low = min(self.shift, other.shift)
        a = _shift_poly(self.num, self.shift - low)
        b = _shift_poly(other.num, other.shift - low)
        if self.den == other.den:
            return normalize(a + b, self.den, low)
        return normalize(a * other.den + b * self.den, self.den * other.den, low)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, self.shift)

    def __sub__(self, other: Number) -> "Scalar":
        return self + (-as_scalar(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return as_scalar(other) - self

    def __mul__(self, other: Number) -> "Scalar":
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction, str)):
                other = as_scalar(other)
            else:
                return NotImplemented
        if not self.num or not other.num:
            return ZERO
        if self.is_laurent() and other.is_laurent():
            return Scalar(self.num * other.num, POLY_RING.one, self.shift + other.shift)
        return normalize(self.num * other.num, self.den * other.den, self.shift + other.shift)

    def __rmul__(self, other: Number) -> "Scalar":
        return self * other

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDenominatorError("zero denominator: inverse of 0")
        return normalize(self.den, self.num, -self.shift)

    def __truediv__(self, other: Number) -> "Scalar":
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        return as_scalar(other) * self.inverse()

    def __pow__(self, exponent: int) -> "Scalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            if isinstance(other, (int, Fraction)):
                other = as_scalar(other)
            else:
                return NotImplemented
        return (self.shift == other.shift and self.num == other.num
                and self.den == other.den)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.shift, self.num, self.den))
        return self._hash

    # ------------------------------------------------------------------
    # printing
    # ------------------------------------------------------------------
    def numerator_terms(self) -> List[Tuple[int, int]]:
        """(v-exponent, coefficient) pairs of v^shift * num, highest first."""
        return sorted(((e + self.shift, int(c)) for (e,), c in self.num.items()), reverse=True)

    def denominator_terms(self) -> List[Tuple[int, int]]:
        return sorted(((e, int(c)) for (e,), c in self.den.items()), reverse=True)

    def to_string(self, form: str = 'q', compact: bool = False) -> str:
        """
        Render the scalar.

        Args:
            form: 'q' for powers of q (half-integer exponents allowed) or 'v'
            compact: drop spaces and braces, as used in bracket tables

        Returns:
            Canonical string; parse_scalar inverts it exactly.
        """
        if not self.num:
            return "0"
        top = _format_terms(self.numerator_terms(), form, compact)
        if self.is_laurent():
            return top
        bottom = _format_terms(self.denominator_terms(), form, compact)
        if len(self.num) > 1:
            top = f"({top})"
        if len(self.den) > 1:
            bottom = f"({bottom})"
        return f"{top}/{bottom}"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Scalar('{self.to_string()}')"


def _format_monomial(k: int, form: str, compact: bool) -> str:
    if k == 0:
        return ""
    if form == 'v':
        return "v" if k == 1 else f"v^{k}"
    if k % 2 == 0:
        half = k // 2
        if half == 1:
            return "q"
        return f"q^{half}" if compact else f"q^{{{half}}}"
    return f"q^({k}/2)" if compact else f"q^{{{k}/2}}"


def _format_terms(terms: List[Tuple[int, int]], form: str, compact: bool) -> str:
    pieces = []
    for index, (k, c) in enumerate(terms):
        mono = _format_monomial(k, form, compact)
        size = abs(c)
        if not mono:
            body = str(size)
        elif size == 1:
            body = mono
        else:
            body = f"{size}{mono}" if compact else f"{size}*{mono}"
        if index == 0:
            pieces.append(("-" if c < 0 else "") + body)
        elif compact:
            pieces.append(("-" if c < 0 else "+") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------
def normalize(num, den=1, shift: int = 0) -> Scalar:
    """
    Return the canonical Scalar equal to v^shift * num / den.

    Args:
        num: PolyElement in Z[v] or int (the Laurent part lives in shift)
        den: PolyElement in Z[v] or int, nonzero
        shift: power of v multiplying the numerator

    Raises:
        ZeroDenominatorError: if den is the zero polynomial
    """
    num, den = _as_poly(num), _as_poly(den)
    if not den:
        raise ZeroDenominatorError("zero denominator")
    if not num:
        return ZERO
    num, low = _strip_v(num)
    shift += low
    if den != POLY_RING.one:
        den, low = _strip_v(den)
        shift -= low
        if den.degree() > 0:
            _, num, den = num.cofactors(den)
        elif abs(int(den.LC)) != 1:
            g = ZZ.gcd(num.content(), den.LC)
            if g != 1:
                num, den = num.quo_ground(g), den.quo_ground(g)
        if den.LC < 0:
            num, den = -num, -den
    return Scalar(num, den, shift)


def from_int(value: int) -> Scalar:
    if value == 0:
        return ZERO
    return Scalar(POLY_RING(value), POLY_RING.one, 0)


def from_fraction(value: Fraction) -> Scalar:
    return normalize(value.numerator, value.denominator)


def v_power(k: int) -> Scalar:
    """v^k = q^(k/2)."""
    return Scalar(POLY_RING.one, POLY_RING.one, k)


def q_power(exponent: Union[int, Fraction]) -> Scalar:
    """q^exponent for an integer or half-integer exponent."""
    doubled = Fraction(exponent) * 2
    if doubled.denominator != 1:
        raise ValueError(f"q-exponent must be a half-integer, got {exponent}")
    return v_power(int(doubled))


def laurent(coeffs: Dict[int, int]) -> Scalar:
    """Build sum c_k v^k from a {k: c_k} mapping."""
    coeffs = {k: c for k, c in coeffs.items() if c}
    if not coeffs:
        return ZERO
    low = min(coeffs)
    return Scalar(_poly_from_exponents({k - low: c for k, c in coeffs.items()}), POLY_RING.one, low)


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, int):
        return from_int(value)
    if isinstance(value, Fraction):
        return from_fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Scalar")


@lru_cache(maxsize=None)
def q_number(k: int) -> Scalar:
    """[k]_q = (q^k - q^-k)/(q - q^-1) as a Laurent polynomial."""
    if k == 0:
        return ZERO
    if k < 0:
        return -q_number(-k)
    return laurent({2 * (k - 1 - 2 * j): 1 for j in range(k)})


def q_conjugate(s: Scalar) -> Scalar:
    """Substitute v -> 1/v."""
    if not s.num:
        return ZERO
    shift = -s.shift - s.num.degree() + s.den.degree()
    return normalize(_reverse_poly(s.num), _reverse_poly(s.den), shift)


def evaluate_at_one(s: Scalar) -> Fraction:
    """Value of s at v = 1 (the classical limit)."""
    top = sum(int(c) for c in s.num.coeffs()) if s.num else 0
    bottom = sum(int(c) for c in s.den.coeffs())
    if bottom == 0:
        raise ClassicalLimitPoleError(f"classical-limit pole in {s}", witness=s.to_string())
    return Fraction(top, bottom)


# ----------------------------------------------------------------------
# parsing
# ----------------------------------------------------------------------
_TERM_RE = re.compile(
    r'^(\d*)(?:([qv])(?:\^(?:\{(-?\d+)(?:/(\d+))?\}|\((-?\d+)/(\d+)\)|(-?\d+)))?)?$'
)


def _top_level_positions(text: str, chars: str) -> List[int]:
    depth, found = 0, []
    for index, char in enumerate(text):
        if char in '({':
            depth += 1
        elif char in ')}':
            depth -= 1
        elif depth == 0 and char in chars:
            found.append(index)
    return found


def _strip_outer_parens(text: str) -> str:
    while text.startswith('(') and text.endswith(')'):
        depth = 0
        for index, char in enumerate(text):
            depth += char == '('
            depth -= char == ')'
            if depth == 0 and index < len(text) - 1:
                return text
        text = text[1:-1]
    return text


def _parse_term(token: str, source: str) -> Tuple[int, int]:
    match = _TERM_RE.match(token.replace('*', ''))
    if not match or token in ('', '*'):
        raise ScalarParseError(f"cannot parse term '{token}' in '{source}'")
    digits, letter, brace_num, brace_den, paren_num, paren_den, bare = match.groups()
    if not digits and not letter:
        raise ScalarParseError(f"empty term in '{source}'")
    coeff = int(digits) if digits else 1
    if not letter:
        return 0, coeff
    if letter == 'v':
        if brace_den or paren_num:
            raise ScalarParseError(f"fractional v-exponent in '{source}'")
        power = brace_num or bare
        return (int(power) if power else 1), coeff
    top = brace_num or paren_num or bare
    bottom = brace_den or paren_den
    exponent = Fraction(int(top) if top else 1, int(bottom) if bottom else 1)
    doubled = exponent * 2
    if doubled.denominator != 1:
        raise ScalarParseError(f"q-exponent {exponent} is not a half-integer in '{source}'")
    return int(doubled), coeff


def _parse_laurent(text: str, source: str) -> Scalar:
    text = _strip_outer_parens(text)
    if not text:
        raise ScalarParseError(f"empty expression in '{source}'")
    cuts = [i for i in _top_level_positions(text, '+-') if i == 0 or text[i - 1] != '^']
    pieces, start = [], 0
    for cut in cuts:
        if cut > start:
            pieces.append(text[start:cut])
        start = cut
    pieces.append(text[start:])
    coeffs: Dict[int, int] = {}
    for piece in pieces:
        sign = 1
        if piece[0] in '+-':
            sign = -1 if piece[0] == '-' else 1
            piece = piece[1:]
        if piece.startswith('(') or piece.startswith('{'):
            raise ScalarParseError(f"nested expression in '{source}'")
        k, c = _parse_term(piece, source)
        coeffs[k] = coeffs.get(k, 0) + sign * c
    return laurent(coeffs)


def parse_scalar(text: str) -> Scalar:
    """
    Parse the canonical or compact string form of a scalar.

    Examples:
        "q^{3/2}", "q + q^{-1}", "(q^{2} - 1)/(q^{2} + 1)", "v^3 - 2", "q^-1"
    """
    source = text
    text = text.replace(' ', '')
    if not text:
        raise ScalarParseError("empty scalar string")
    slashes = _top_level_positions(text, '/')
    if len(slashes) > 1:
        raise ScalarParseError(f"more than one fraction bar in '{source}'")
    if not slashes:
        return _parse_laurent(text, source)
    top, bottom = text[:slashes[0]], text[slashes[0] + 1:]
    numerator = _parse_laurent(top, source)
    denominator = _parse_laurent(bottom, source)
    if not denominator:
        raise ZeroDenominatorError(f"zero denominator in '{source}'")
    return numerator / denominator


ZERO = Scalar(POLY_RING.zero, POLY_RING.one, 0)
ONE = Scalar(POLY_RING.one, POLY_RING.one, 0)
Q = v_power(2)
Q_INV = v_power(-2)
V = v_power(1)
