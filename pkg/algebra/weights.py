"""
Weights and root-vector letters for type A_{n-1}.

Weights are integer vectors in fundamental-weight coordinates. Simple roots
have unit length, so <H_i, w_j> = delta_ij / 2 and q^<H_i, lam> = v^(lam_i).
Root-lattice grades (simple-root multiplicities) are plain integer tuples.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

Grade = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Weight:
    """Exponent of a group-like generator q^lambda."""

    coords: Tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, j: int) -> "Weight":
        """omega_j, 1-based."""
        return cls(tuple(1 if m == j - 1 else 0 for m in range(rank)))

    @classmethod
    def simple_root(cls, rank: int, i: int) -> "Weight":
        """H_i in omega-coordinates: the i-th Cartan row."""
        return cls(cartan_row(rank, i))

    @classmethod
    def from_grade(cls, grade: Sequence[int]) -> "Weight":
        """sum_i c_i H_i expressed in omega-coordinates."""
        rank = len(grade)
        coords = [0] * rank
        for i, c in enumerate(grade, start=1):
            for m, entry in enumerate(cartan_row(rank, i)):
                coords[m] += c * entry
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scaled(self, factor: int) -> "Weight":
        return Weight(tuple(factor * a for a in self.coords))

    def v_exponent(self, grade: Sequence[int]) -> int:
        """Exponent k with q^<alpha, lambda> = v^k for alpha = sum c_i H_i."""
        return sum(c * a for c, a in zip(grade, self.coords))

    def __str__(self) -> str:
        return "q^(" + ",".join(str(a) for a in self.coords) + ")"


@lru_cache(maxsize=None)
def cartan_row(rank: int, i: int) -> Tuple[int, ...]:
    return tuple(2 if m == i - 1 else (-1 if abs(m - (i - 1)) == 1 else 0) for m in range(rank))


@dataclass(frozen=True)
class RootVector:
    """E or F root vector attached to the positive root e_start - e_end."""

    kind: str
    start: int
    end: int

    @property
    def height(self) -> int:
        return self.end - self.start

    @property
    def is_simple(self) -> bool:
        return self.height == 1

    @property
    def index(self) -> int:
        """Simple-root index, for simple letters."""
        return self.start

    def grade(self, rank: int) -> Grade:
        sign = 1 if self.kind == 'E' else -1
        return tuple(sign if self.start <= m + 1 < self.end else 0 for m in range(rank))

    @property
    def name(self) -> str:
        return self.kind + "".join(str(m) for m in range(self.start, self.end))

    def __str__(self) -> str:
        return self.name


def positive_roots(n: int) -> List[Tuple[int, int]]:
    """Positive roots of sl(n) as (start, end) pairs in convex lexicographic order."""
    return [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]


_LETTER_RE = re.compile(r'^([EF])(\d+)$')
_WEIGHT_RE = re.compile(r'^q\^\((-?\d+(?:,-?\d+)*)\)$')


def letter_to_str(letter) -> str:
    return str(letter)


def letter_from_str(text: str):
    """Inverse of letter_to_str for root vectors and weights."""
    match = _LETTER_RE.match(text)
    if match:
        digits = [int(d) for d in match.group(2)]
        if digits != list(range(digits[0], digits[0] + len(digits))):
            raise ValueError(f"not a root-vector name: {text}")
        return RootVector(match.group(1), digits[0], digits[-1] + 1)
    match = _WEIGHT_RE.match(text)
    if match:
        return Weight(tuple(int(a) for a in match.group(1).split(',')))
    raise ValueError(f"unknown letter: {text}")
