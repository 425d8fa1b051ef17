"""
Exact linear algebra over Q(v) on sparse coordinate vectors.

A coordinate vector is a dict {key: Scalar} with no zero entries. Keys are
PBW words, tensor pairs or plain indices; ``sort_key`` maps them into the
global monomial order, and the pivot of a vector is its largest key.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence

from algebra.scalars import ONE, ZERO, Scalar

CoordVector = Dict[Hashable, Scalar]
SortKey = Callable[[Hashable], object]


def _identity(key):
    return key


def axpy(target: CoordVector, factor: Scalar, vector: CoordVector) -> None:
    """target += factor * vector, in place."""
    if not factor:
        return
    for key, value in vector.items():
        total = target.get(key)
        total = factor * value if total is None else total + factor * value
        if total:
            target[key] = total
        else:
            del target[key]


def scale_vector(vector: CoordVector, factor: Scalar) -> CoordVector:
    if not factor:
        return {}
    return {k: c * factor for k, c in vector.items()}


def combine(coefficients: Sequence[Scalar], vectors: Sequence[CoordVector]) -> CoordVector:
    total: CoordVector = {}
    for c, vec in zip(coefficients, vectors):
        axpy(total, c, vec)
    return total


@dataclass
class Basis:
    """Reduced row-echelon basis: monic pivots, zero elsewhere in pivot columns."""

    rows: List[CoordVector]
    pivots: List[Hashable]
    sort_key: SortKey = field(default=_identity, repr=False)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, x: CoordVector) -> bool:
        return coordinates(x, self) is not None


class _Eliminator:
    """Incremental Gauss-Jordan elimination."""

    def __init__(self, sort_key: SortKey, eligible: Callable[[Hashable], bool] = lambda k: True):
        self.sort_key = sort_key
        self.eligible = eligible
        self.rows: Dict[Hashable, CoordVector] = {}

    def reduce(self, vector: CoordVector) -> CoordVector:
        vector = dict(vector)
        for pivot in [k for k in vector if k in self.rows]:
            coeff = vector.get(pivot)
            if coeff:
                axpy(vector, -coeff, self.rows[pivot])
        return vector

    def add(self, vector: CoordVector) -> Optional[CoordVector]:
        """Insert a vector; returns the reduced remainder when it adds nothing to the span."""
        remainder = self.reduce(vector)
        candidates = [k for k in remainder if self.eligible(k)]
        if not candidates:
            return remainder
        pivot = max(candidates, key=self.sort_key)
        inverse = remainder[pivot].inverse()
        remainder = scale_vector(remainder, inverse)
        for row in self.rows.values():
            coeff = row.get(pivot)
            if coeff:
                axpy(row, -coeff, remainder)
        self.rows[pivot] = remainder
        return None

    def basis(self) -> Basis:
        pivots = sorted(self.rows, key=self.sort_key)
        return Basis([self.rows[p] for p in pivots], pivots, self.sort_key)


def row_reduce(vectors: Sequence[CoordVector], sort_key: SortKey = _identity) -> Basis:
    """
    Echelon basis of the span of ``vectors``.

    Args:
        vectors: coordinate vectors
        sort_key: maps keys into the global order; pivots are maximal keys

    Returns:
        Basis whose length is the rank
    """
    eliminator = _Eliminator(sort_key)
    for vector in vectors:
        eliminator.add(vector)
    return eliminator.basis()


def coordinates(x: CoordVector, basis: Basis) -> Optional[List[Scalar]]:
    """Coefficients c with x = sum c_r row_r, or None when x is outside the span."""
    coeffs = [x.get(pivot, ZERO) for pivot in basis.pivots]
    remainder = dict(x)
    for c, row in zip(coeffs, basis.rows):
        axpy(remainder, -c, row)
    return None if remainder else coeffs


class _Tag:
    __slots__ = ('index',)

    def __init__(self, index: int):
        self.index = index

    def __eq__(self, other):
        return isinstance(other, _Tag) and other.index == self.index

    def __hash__(self):
        return hash(('tag', self.index))


def _tagged_key(sort_key: SortKey) -> SortKey:
    def key(k):
        if isinstance(k, _Tag):
            return (0, k.index)
        return (1, sort_key(k))
    return key


def _is_untagged(k) -> bool:
    return not isinstance(k, _Tag)


def kernel(columns: Sequence[CoordVector], sort_key: SortKey = _identity) -> Basis:
    """
    Null space of the matrix with the given columns.

    Kernel vectors are keyed by column index.
    """
    eliminator = _Eliminator(_tagged_key(sort_key), _is_untagged)
    found: List[CoordVector] = []
    for index, column in enumerate(columns):
        augmented = dict(column)
        augmented[_Tag(index)] = ONE
        remainder = eliminator.add(augmented)
        if remainder is not None:
            found.append({k.index: c for k, c in remainder.items()})
    return row_reduce(found)


class CoordinateSystem:
    """
    Coordinates with respect to an ordered, linearly independent list of vectors.

    Raises:
        ValueError: if the vectors are dependent
    """

    def __init__(self, vectors: Sequence[CoordVector], sort_key: SortKey = _identity):
        self.size = len(vectors)
        self._eliminator = _Eliminator(_tagged_key(sort_key), _is_untagged)
        for index, vector in enumerate(vectors):
            augmented = dict(vector)
            augmented[_Tag(index)] = ONE
            if self._eliminator.add(augmented) is not None:
                raise ValueError(f"vector {index} is dependent on its predecessors")

    def __len__(self) -> int:
        return self.size

    def coordinates(self, x: CoordVector) -> Optional[List[Scalar]]:
        remainder = self._eliminator.reduce(x)
        if any(_is_untagged(k) for k in remainder):
            return None
        return [-remainder.get(_Tag(i), ZERO) for i in range(self.size)]

    def contains(self, x: CoordVector) -> bool:
        return self.coordinates(x) is not None
