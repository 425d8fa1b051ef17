"""
Random test elements for the Hopf-algebra checks.
"""

from typing import List, Optional

import numpy as np

from algebra.scalars import from_int, v_power
from algebra.uq import AlgebraElement, QuantumGroup
from config.settings import get_config


class ElementSampler:
    """Draw random elements of U_q(sl n) from a seeded generator."""

    MAX_COEFFICIENT = 3
    MAX_V_SHIFT = 2

    def __init__(self, algebra: QuantumGroup, seed: Optional[int] = None,
                 max_length: Optional[int] = None, max_terms: int = 2):
        cfg = get_config()
        self.algebra = algebra
        self.rng = np.random.default_rng(cfg.SAMPLE_SEED if seed is None else seed)
        self.max_length = max_length or cfg.MAX_SAMPLE_LENGTH
        self.max_terms = max_terms
        self.letters = self._alphabet()

    def _alphabet(self) -> list:
        algebra = self.algebra
        letters = [algebra.e_letter(i) for i in range(1, algebra.n)]
        letters += [algebra.f_letter(i) for i in range(1, algebra.n)]
        for j in range(1, algebra.n):
            w = algebra.fundamental_weight(j)
            letters += [w, -w]
        return letters

    def word(self) -> tuple:
        length = int(self.rng.integers(0, self.max_length + 1))
        picks = self.rng.integers(0, len(self.letters), size=length)
        return tuple(self.letters[int(k)] for k in picks)

    def coefficient(self):
        value = 0
        while value == 0:
            value = int(self.rng.integers(-self.MAX_COEFFICIENT, self.MAX_COEFFICIENT + 1))
        shift = int(self.rng.integers(-self.MAX_V_SHIFT, self.MAX_V_SHIFT + 1))
        return from_int(value) * v_power(shift)

    def element(self) -> AlgebraElement:
        """A sum of up to ``max_terms`` random words, in normal form."""
        total = self.algebra.zero()
        for _ in range(int(self.rng.integers(1, self.max_terms + 1))):
            total = total + self.algebra.from_word(self.word(), self.coefficient())
        return total

    def elements(self, count: int) -> List[AlgebraElement]:
        return [self.element() for _ in range(count)]

    def small_element(self) -> AlgebraElement:
        """A single random generator word of length at most 2."""
        length = int(self.rng.integers(1, 3))
        picks = self.rng.integers(0, len(self.letters), size=length)
        return self.algebra.from_word(tuple(self.letters[int(k)] for k in picks), self.coefficient())
