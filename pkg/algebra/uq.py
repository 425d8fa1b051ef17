"""
The simply-connected quantised enveloping algebra U_q(sl n), n = 2, 3, 4.

Elements are linear combinations of PBW words F-word . q^lam . E-word.
The rewrite rules are generated for a convex order on the positive roots
and certified by the confluence checker when the algebra is built.

Conventions: simple roots have unit length, q^lam E_i q^-lam =
q^<H_i,lam> E_i with <H_i, w_j> = delta_ij/2, and

    Delta(E_i) = E_i (x) q^-H_i + q^H_i (x) E_i    (same shape for F_i)
    S(E_i) = -q^-1 E_i,  S(F_i) = -q F_i,  S(q^lam) = q^-lam
"""

import logging
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from algebra.errors import IndexRangeError, NonConfluentPresetError, UnsupportedRankError
from algebra.reports import VerificationReport
from algebra.rewrite import (ConfluenceReport, FreeElement, RewriteRule, RewriteSystem, RuleFamily,
                             TermOrder, Word, check_confluence)
from algebra.scalars import ONE, Q, Q_INV, ZERO, Scalar, as_scalar, q_number, v_power
from algebra.weights import Grade, RootVector, Weight, letter_from_str, positive_roots
from config.constants import SUPPORTED_RANKS

logger = logging.getLogger(__name__)

Q_MINUS_Q_INV = Q - Q_INV


class PBWMonomial(NamedTuple):
    f_word: Tuple[RootVector, ...]
    weight: Weight
    e_word: Tuple[RootVector, ...]


class AlgebraElement(FreeElement):
    """Element of U_q(sl n): normal words with Scalar coefficients."""

    __slots__ = ('algebra',)

    def __init__(self, algebra: "QuantumGroup", terms: Optional[Dict[Word, Scalar]] = None):
        super().__init__(terms)
        self.algebra = algebra

    def _spawn(self, terms: Dict[Word, Scalar]) -> "AlgebraElement":
        element = AlgebraElement.__new__(AlgebraElement)
        element.terms = terms
        element.algebra = self.algebra
        return element

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def pbw_terms(self) -> List[Tuple[PBWMonomial, Scalar]]:
        return [(self.algebra.to_monomial(w), c) for w, c in self.items()]

    def __str__(self) -> str:
        return self.algebra.format_element(self)

    __repr__ = __str__


class TensorElement:
    """Linear combination of k-tuples of normal words."""

    __slots__ = ('algebra', 'terms')

    def __init__(self, algebra: "QuantumGroup", terms: Optional[Dict[Tuple[Word, ...], Scalar]] = None):
        self.algebra = algebra
        self.terms: Dict[Tuple[Word, ...], Scalar] = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def product_of(cls, *factors: AlgebraElement) -> "TensorElement":
        """x_1 (x) x_2 (x) ... as a tensor."""
        algebra = factors[0].algebra
        terms: Dict[Tuple[Word, ...], Scalar] = {(): ONE}
        for factor in factors:
            terms = {key + (w,): c * d for key, c in terms.items() for w, d in factor.items()}
        return cls(algebra, terms)

    @property
    def arity(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def items(self):
        return self.terms.items()

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _accumulate(self, terms, key, value):
        total = terms.get(key)
        total = value if total is None else total + value
        if total:
            terms[key] = total
        else:
            terms.pop(key, None)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        terms = dict(self.terms)
        for key, c in other.terms.items():
            self._accumulate(terms, key, c)
        return TensorElement(self.algebra, terms)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, factor) -> "TensorElement":
        factor = as_scalar(factor)
        return TensorElement(self.algebra, {k: c * factor for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self.algebra.tensor_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def multiply_out(self) -> AlgebraElement:
        """m(a (x) b (x) ...) in U."""
        total = self.algebra.zero()
        for key, c in self.terms.items():
            word = ()
            for part in key:
                word = word + part
            total = total + self.algebra.from_word(word).scale(c)
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fmt = self.algebra.format_word
        return " + ".join(f"({c})*" + " (x) ".join(fmt(w) for w in key) for key, c in self.terms.items())

    __repr__ = __str__


class QuantumGroup:
    """
    U_q(sl n) with its PBW rewrite system and Hopf structure.

    Args:
        n: 2, 3 or 4
        step_budget: rewrite budget per reduction (defaults to the configured value)
        certify: run the confluence checker on the generated rules
    """

    def __init__(self, n: int, step_budget: Optional[int] = None, certify: bool = True):
        if n not in SUPPORTED_RANKS:
            raise UnsupportedRankError(f"U_q(sl {n}) is not supported; choose n in {SUPPORTED_RANKS}")
        self.n = n
        self.rank = n - 1
        self.roots = positive_roots(n)
        self._position = {root: p for p, root in enumerate(self.roots)}
        self.e_letters = [RootVector('E', *root) for root in self.roots]
        self.f_letters = [RootVector('F', *root) for root in self.roots]
        self.order = TermOrder(self._letter_rank, self._letter_degree)
        self.probe_weights = [Weight.fundamental(self.rank, j) for j in range(1, n)]
        self.probe_weights += [-w for w in self.probe_weights]
        self._grades: Dict[Word, Grade] = {}
        self._coproducts: Dict[Word, TensorElement] = {}
        self._antipodes: Dict[Word, AlgebraElement] = {}
        self._k_cache: Dict[Tuple[Weight, int], AlgebraElement] = {}
        logger.info("building U_q(sl %d) rewrite rules", n)
        self.rules = self._build_rules(step_budget)
        self.certificate: Optional[ConfluenceReport] = None
        if certify:
            self.certificate = check_confluence(self.rules)
            if not self.certificate.is_confluent:
                bad = self.certificate.failures()[0]
                raise NonConfluentPresetError(
                    f"U_q(sl {n}) preset is not confluent at {self.format_word(bad.ambiguity.word)}",
                    witness=bad)
            logger.info("U_q(sl %d): %s", n, self.certificate.summary())

    # ------------------------------------------------------------------
    # letters and order
    # ------------------------------------------------------------------
    def _letter_rank(self, letter) -> tuple:
        if isinstance(letter, Weight):
            return (1, letter.coords)
        p = self._position[(letter.start, letter.end)]
        return (2, p) if letter.kind == 'E' else (0, -p)

    @staticmethod
    def _letter_degree(letter) -> int:
        return 0 if isinstance(letter, Weight) else letter.height

    def letter_grade(self, letter) -> Grade:
        if isinstance(letter, Weight):
            return (0,) * self.rank
        return letter.grade(self.rank)

    def word_grade(self, word: Word) -> Grade:
        grade = self._grades.get(word)
        if grade is None:
            total = [0] * self.rank
            for letter in word:
                for m, c in enumerate(self.letter_grade(letter)):
                    total[m] += c
            grade = self._grades[word] = tuple(total)
        return grade

    def e_letter(self, i: int, j: Optional[int] = None) -> RootVector:
        """E_i, or E for the root (i, j)."""
        return self._root_letter('E', i, j)

    def f_letter(self, i: int, j: Optional[int] = None) -> RootVector:
        return self._root_letter('F', i, j)

    def _root_letter(self, kind: str, i: int, j: Optional[int]) -> RootVector:
        end = i + 1 if j is None else j
        if (i, end) not in self._position:
            raise IndexRangeError(f"no root ({i}, {end}) in sl({self.n})")
        return RootVector(kind, i, end)

    def simple_root(self, i: int) -> Weight:
        if not 1 <= i <= self.rank:
            raise IndexRangeError(f"simple root index {i} out of range for sl({self.n})")
        return Weight.simple_root(self.rank, i)

    def fundamental_weight(self, j: int) -> Weight:
        if not 1 <= j <= self.rank:
            raise IndexRangeError(f"fundamental weight index {j} out of range for sl({self.n})")
        return Weight.fundamental(self.rank, j)

    # ------------------------------------------------------------------
    # element constructors
    # ------------------------------------------------------------------
    def element(self, terms: Optional[Dict[Word, Scalar]] = None) -> AlgebraElement:
        return AlgebraElement(self, terms)

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self)

    def one(self) -> AlgebraElement:
        return AlgebraElement(self, {(): ONE})

    def from_word(self, word: Sequence, coeff=ONE) -> AlgebraElement:
        """Normal form of a single (not necessarily normal) word."""
        coeff = as_scalar(coeff)
        reduced = self.rules.reduce_word(tuple(word))
        return self.element({w: c * coeff for w, c in reduced.items()})

    def E(self, i: int, j: Optional[int] = None) -> AlgebraElement:
        return self.from_word((self.e_letter(i, j),))

    def F(self, i: int, j: Optional[int] = None) -> AlgebraElement:
        return self.from_word((self.f_letter(i, j),))

    def K(self, weight: Weight) -> AlgebraElement:
        """The group-like q^weight."""
        if weight.is_zero():
            return self.one()
        return self.element({(weight,): ONE})

    def qH(self, i: int, factor: int = 1) -> AlgebraElement:
        """q^(factor * H_i)."""
        return self.K(self.simple_root(i).scaled(factor))

    def generators(self) -> List[AlgebraElement]:
        """E_i, F_i and q^{w_j}."""
        gens = [self.E(i) for i in range(1, self.n)] + [self.F(i) for i in range(1, self.n)]
        return gens + [self.K(self.fundamental_weight(j)) for j in range(1, self.n)]

    # ------------------------------------------------------------------
    # rule generation
    # ------------------------------------------------------------------
    def _families(self) -> List[RuleFamily]:
        def merge(window):
            a, b = window
            if not (isinstance(a, Weight) and isinstance(b, Weight)):
                return None
            total = a + b
            return FreeElement({(): ONE} if total.is_zero() else {(total,): ONE})

        def e_past_weight(window):
            a, b = window
            if not (isinstance(a, RootVector) and a.kind == 'E' and isinstance(b, Weight)):
                return None
            return FreeElement({(b, a): v_power(-b.v_exponent(a.grade(self.rank)))})

        def weight_past_f(window):
            a, b = window
            if not (isinstance(a, Weight) and isinstance(b, RootVector) and b.kind == 'F'):
                return None
            return FreeElement({(b, a): v_power(a.v_exponent(b.grade(self.rank)))})

        return [RuleFamily('weight-merge', 2, merge),
                RuleFamily('E-past-weight', 2, e_past_weight),
                RuleFamily('weight-past-F', 2, weight_past_f)]

    def _e_relation(self, a: Tuple[int, int], b: Tuple[int, int]) -> Dict[Word, Scalar]:
        """Right-hand side for E_a E_b with b before a in the convex order."""
        (k, l), (i, j) = a, b
        Ea, Eb = RootVector('E', k, l), RootVector('E', i, j)
        swapped = (Eb, Ea)
        if i == k:
            return {swapped: Q}
        if j < k:
            return {swapped: ONE}
        if j == k:
            return {swapped: Q_INV, (RootVector('E', i, l),): ONE}
        if l < j:
            return {swapped: ONE}
        if l == j:
            return {swapped: Q}
        return {swapped: ONE, (RootVector('E', i, l), RootVector('E', k, j)): Q_MINUS_Q_INV}

    @staticmethod
    def _f_scale(letter: RootVector) -> int:
        # F_x = q^(h-1) rho(E_x); returned as a v-exponent
        return 2 * (letter.height - 1)

    def _f_relation(self, a: Tuple[int, int], b: Tuple[int, int]) -> Tuple[Word, Dict[Word, Scalar]]:
        """F-rule obtained from the E-rule for E_a E_b by the anti-automorphism E -> F."""
        Fa, Fb = RootVector('F', *a), RootVector('F', *b)
        lhs = (Fb, Fa)
        rhs: Dict[Word, Scalar] = {}
        for word, coeff in self._e_relation(a, b).items():
            image = tuple(RootVector('F', x.start, x.end) for x in reversed(word))
            exponent = self._f_scale(Fa) + self._f_scale(Fb) - sum(self._f_scale(x) for x in image)
            rhs[image] = coeff * v_power(exponent)
        return lhs, rhs

    def _ef_simple(self, i: int, j: int) -> Dict[Word, Scalar]:
        Ei, Fj = RootVector('E', i, i + 1), RootVector('F', j, j + 1)
        rhs = {(Fj, Ei): ONE}
        if i == j:
            h = self.simple_root(i).scaled(2)
            scale = Q_MINUS_Q_INV.inverse()
            rhs[(h,)] = scale
            rhs[(-h,)] = -scale
        return rhs

    def _build_rules(self, step_budget: Optional[int]) -> RewriteSystem:
        rules: List[RewriteRule] = []
        for pa, a in enumerate(self.roots):
            for b in self.roots[:pa]:
                Ea, Eb = RootVector('E', *a), RootVector('E', *b)
                rules.append(RewriteRule((Ea, Eb), FreeElement(self._e_relation(a, b)), f"{Ea}.{Eb}"))
                lhs, rhs = self._f_relation(a, b)
                rules.append(RewriteRule(lhs, FreeElement(rhs), f"{lhs[0]}.{lhs[1]}"))
        probes = self.e_letters + self.f_letters + self.probe_weights
        system = RewriteSystem(self.order, rules, self._families(), probes, step_budget)

        def height(root):
            return root[1] - root[0]

        pairs = sorted(((a, b) for a in self.roots for b in self.roots),
                       key=lambda ab: (height(ab[0]) + height(ab[1]), self._position[ab[0]], self._position[ab[1]]))
        for a, b in pairs:
            Ea, Fb = RootVector('E', *a), RootVector('F', *b)
            if height(a) == 1 and height(b) == 1:
                rhs = FreeElement(self._ef_simple(a[0], b[0]))
            elif height(a) > 1:
                sub, simple = RootVector('E', a[0], a[1] - 1), RootVector('E', a[1] - 1, a[1])
                rhs = (self._straighten(system, (simple,), (sub, Fb), ())
                       - self._straighten(system, (sub,), (simple, Fb), ()).scale(Q_INV))
            else:
                sub, simple = RootVector('F', b[0], b[1] - 1), RootVector('F', b[1] - 1, b[1])
                rhs = (self._straighten(system, (), (Ea, sub), (simple,)).scale(Q)
                       - self._straighten(system, (), (Ea, simple), (sub,)))
            system = system.with_rules([RewriteRule((Ea, Fb), rhs, f"{Ea}.{Fb}")])
        return system

    @staticmethod
    def _straighten(system: RewriteSystem, prefix: Word, core: Word, suffix: Word) -> FreeElement:
        """nf(prefix * nf(core) * suffix) under a partially built system."""
        inner = system.normal_form(FreeElement.from_word(core))
        return system.normal_form(FreeElement({prefix + w + suffix: c for w, c in inner.items()}))

    # ------------------------------------------------------------------
    # algebra structure
    # ------------------------------------------------------------------
    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Concatenate and reduce."""
        terms: Dict[Word, Scalar] = {}
        reduce_word = self.rules.reduce_word
        for u, c in a.items():
            for w, d in b.items():
                cd = c * d
                for x, e in reduce_word(u + w).items():
                    total = terms.get(x)
                    total = cd * e if total is None else total + cd * e
                    if total:
                        terms[x] = total
                    else:
                        del terms[x]
        return self.element_unchecked(terms)

    def element_unchecked(self, terms: Dict[Word, Scalar]) -> AlgebraElement:
        element = AlgebraElement.__new__(AlgebraElement)
        element.terms = terms
        element.algebra = self
        return element

    def product(self, *factors: AlgebraElement) -> AlgebraElement:
        result = self.one()
        for factor in factors:
            result = self.multiply(result, factor)
        return result

    def commutator(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self.multiply(a, b) - self.multiply(b, a)

    def tensor_multiply(self, a: TensorElement, b: TensorElement) -> TensorElement:
        terms: Dict[Tuple[Word, ...], Scalar] = {}
        reduce_word = self.rules.reduce_word
        for keys_a, c in a.items():
            for keys_b, d in b.items():
                partial: Dict[Tuple[Word, ...], Scalar] = {(): c * d}
                for u, w in zip(keys_a, keys_b):
                    reduced = reduce_word(u + w)
                    partial = {key + (x,): s * e for key, s in partial.items() for x, e in reduced.items()}
                for key, value in partial.items():
                    total = terms.get(key)
                    total = value if total is None else total + value
                    if total:
                        terms[key] = total
                    else:
                        terms.pop(key, None)
        return TensorElement(self, terms)

    # ------------------------------------------------------------------
    # Hopf structure
    # ------------------------------------------------------------------
    def _letter_coproduct(self, letter) -> TensorElement:
        if isinstance(letter, Weight):
            return TensorElement(self, {((letter,), (letter,)): ONE})
        if letter.is_simple:
            h = self.simple_root(letter.index)
            x = (letter,)
            return TensorElement(self, {(x, (-h,)): ONE, ((h,), x): ONE})
        sub = RootVector(letter.kind, letter.start, letter.end - 1)
        simple = RootVector(letter.kind, letter.end - 1, letter.end)
        d_sub, d_simple = self._word_coproduct((sub,)), self._word_coproduct((simple,))
        if letter.kind == 'E':
            return d_simple * d_sub - (d_sub * d_simple).scale(Q_INV)
        return (d_sub * d_simple).scale(Q) - d_simple * d_sub

    def _word_coproduct(self, word: Word) -> TensorElement:
        cached = self._coproducts.get(word)
        if cached is not None:
            return cached
        if not word:
            result = TensorElement(self, {((), ()): ONE})
        elif len(word) == 1:
            result = self._letter_coproduct(word[0])
        else:
            result = self._word_coproduct(word[:-1]) * self._word_coproduct(word[-1:])
        self._coproducts[word] = result
        return result

    def coproduct(self, a: AlgebraElement) -> TensorElement:
        """Delta(a), an algebra morphism into U (x) U."""
        total = TensorElement(self)
        for word, c in a.items():
            total = total + self._word_coproduct(word).scale(c)
        return total

    def _letter_antipode(self, letter) -> AlgebraElement:
        if isinstance(letter, Weight):
            return self.K(-letter)
        if letter.is_simple:
            factor = -Q_INV if letter.kind == 'E' else -Q
            return self.element({(letter,): factor})
        sub = self._word_antipode((RootVector(letter.kind, letter.start, letter.end - 1),))
        simple = self._word_antipode((RootVector(letter.kind, letter.end - 1, letter.end),))
        if letter.kind == 'E':
            return self.multiply(sub, simple) - self.multiply(simple, sub).scale(Q_INV)
        return self.multiply(simple, sub).scale(Q) - self.multiply(sub, simple)

    def _word_antipode(self, word: Word) -> AlgebraElement:
        cached = self._antipodes.get(word)
        if cached is not None:
            return cached
        if not word:
            result = self.one()
        elif len(word) == 1:
            result = self._letter_antipode(word[0])
        else:
            result = self.multiply(self._word_antipode(word[1:]), self._word_antipode(word[:1]))
        self._antipodes[word] = result
        return result

    def antipode(self, a: AlgebraElement) -> AlgebraElement:
        total = self.zero()
        for word, c in a.items():
            total = total + self._word_antipode(word).scale(c)
        return total

    def counit(self, a: AlgebraElement) -> Scalar:
        total = ZERO
        for word, c in a.items():
            if all(isinstance(x, Weight) for x in word):
                total = total + c
        return total

    # ------------------------------------------------------------------
    # adjoint action
    # ------------------------------------------------------------------
    def _ad_letter(self, letter, y: AlgebraElement) -> AlgebraElement:
        if not y:
            return y
        if isinstance(letter, Weight):
            return self.element_unchecked({
                w: c * v_power(letter.v_exponent(self.word_grade(w))) for w, c in y.items()
            })
        if letter.is_simple:
            x = self.element({(letter,): ONE})
            h = self.qH(letter.index)
            first = self.multiply(self.multiply(x, y), h)
            second = self.multiply(self.multiply(h, y), x)
            if letter.kind == 'E':
                return first - second.scale(Q_INV)
            return first - second.scale(Q)
        sub = RootVector(letter.kind, letter.start, letter.end - 1)
        simple = RootVector(letter.kind, letter.end - 1, letter.end)
        if letter.kind == 'E':
            return (self._ad_letter(simple, self._ad_letter(sub, y))
                    - self._ad_letter(sub, self._ad_letter(simple, y)).scale(Q_INV))
        return (self._ad_letter(sub, self._ad_letter(simple, y)).scale(Q)
                - self._ad_letter(simple, self._ad_letter(sub, y)))

    def ad_word(self, word: Word, y: AlgebraElement) -> AlgebraElement:
        for letter in reversed(word):
            y = self._ad_letter(letter, y)
        return y

    def ad(self, u: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """ad u(y) through the closed forms, composed letter by letter."""
        total = self.zero()
        for word, c in u.items():
            total = total + self.ad_word(word, y).scale(c)
        return total

    def ad_hopf(self, u: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        """ad u(y) = sum u_(1) y S(u_(2))."""
        total = self.zero()
        for (left, right), c in self.coproduct(u).items():
            piece = self.multiply(self.multiply(self.element_unchecked({left: ONE}), y),
                                  self._word_antipode(right))
            total = total + piece.scale(c)
        return total

    def ad_E(self, i: int, y: AlgebraElement) -> AlgebraElement:
        return self._ad_letter(self.e_letter(i), y)

    def ad_F(self, i: int, y: AlgebraElement) -> AlgebraElement:
        return self._ad_letter(self.f_letter(i), y)

    # ------------------------------------------------------------------
    # central elements
    # ------------------------------------------------------------------
    def K_sequence(self, weight: Weight, r: int) -> AlgebraElement:
        """K_0 = q^(-4 lam), K_r = ad(F_r E_r) K_(r-1)."""
        if not 0 <= r <= self.rank:
            raise IndexRangeError(f"K_{r} is undefined for sl({self.n}); need 0 <= r <= {self.rank}")
        key = (weight, r)
        if key not in self._k_cache:
            if r == 0:
                value = self.K(weight.scaled(-4))
            else:
                value = self.ad_F(r, self.ad_E(r, self.K_sequence(weight, r - 1)))
            self._k_cache[key] = value
        return self._k_cache[key]

    def central_element(self, weight: Optional[Weight] = None) -> AlgebraElement:
        """C = sum_r (-1)^r [n-r]/[n] K_r."""
        weight = weight or self.fundamental_weight(1)
        total = self.zero()
        for r in range(self.n):
            coeff = q_number(self.n - r) / q_number(self.n)
            if r % 2:
                coeff = -coeff
            total = total + self.K_sequence(weight, r).scale(coeff)
        return total

    def is_central(self, u: AlgebraElement) -> bool:
        return all(self.multiply(u, g) == self.multiply(g, u) for g in self.generators())

    def verify_K_relations(self) -> VerificationReport:
        """The vanishing and recursion identities for ad E_j(K_i) plus the ad K_r(X_1) eigenvalues."""
        report = VerificationReport(f"k-relations sl({self.n})")
        weight = self.fundamental_weight(1)
        K = [self.K_sequence(weight, r) for r in range(self.n)]
        for j in range(1, self.n):
            for i in range(self.n):
                if i < j - 1 or i > j + 1:
                    image = self.ad_E(j, K[i])
                    report.record(f"ad E{j}(K{i}) = 0", not image, witness={'value': str(image)})
            if j + 1 <= self.rank:
                left, right = self.ad_E(j, K[j + 1]), self.ad_E(j, K[j - 1])
                report.record(f"ad E{j}(K{j + 1}) = ad E{j}(K{j - 1})", left == right,
                              witness={'left': str(left), 'right': str(right)})
            left, right = self.ad_E(j, K[j]), self.ad_E(j, K[j - 1]).scale(q_number(2))
            report.record(f"ad E{j}(K{j}) = [2] ad E{j}(K{j - 1})", left == right,
                          witness={'left': str(left), 'right': str(right)})

        x1 = self.ad_E(1, K[0]).scale(Q_MINUS_Q_INV.inverse())
        expected = {0: Q_INV * Q_INV, 1: -(Q * (Q * Q - Q_INV * Q_INV))}
        if self.rank >= 2:
            expected[2] = -(Q * Q - ONE)
        for r in range(3, self.n):
            expected[r] = ZERO
        for r, eigenvalue in expected.items():
            image = self.ad(K[r], x1)
            report.record(f"ad K{r}(X1) = ({eigenvalue}) X1", image == x1.scale(eigenvalue),
                          witness={'value': str(image)})
        central = self.central_element(weight)
        report.record("C is central", self.is_central(central))
        d = Q * Q - ONE + Q_INV * Q_INV
        report.record("ad C(X1) = (q^2 - 1 + q^-2) X1", self.ad(central, x1) == x1.scale(d))
        return report

    # ------------------------------------------------------------------
    # PBW view and printing
    # ------------------------------------------------------------------
    def to_monomial(self, word: Word) -> PBWMonomial:
        f_part, e_part, weight = [], [], Weight.zero(self.rank)
        for letter in word:
            if isinstance(letter, Weight):
                weight = weight + letter
            elif letter.kind == 'F':
                f_part.append(letter)
            else:
                e_part.append(letter)
        return PBWMonomial(tuple(f_part), weight, tuple(e_part))

    def from_monomial(self, monomial: PBWMonomial) -> Word:
        middle = () if monomial.weight.is_zero() else (monomial.weight,)
        return tuple(monomial.f_word) + middle + tuple(monomial.e_word)

    def word_key(self, word: Word) -> tuple:
        return self.order.key(word)

    def format_word(self, word: Word) -> str:
        return " ".join(str(x) for x in word) if word else "1"

    def format_element(self, x: AlgebraElement) -> str:
        if not x:
            return "0"
        words = sorted(x.terms, key=self.word_key, reverse=True)
        return " + ".join(f"({x.terms[w]})*{self.format_word(w)}" for w in words)

    def decode_letter(self, text: str):
        letter = letter_from_str(text)
        if isinstance(letter, RootVector) and (letter.start, letter.end) not in self._position:
            raise IndexRangeError(f"letter {text} does not belong to sl({self.n})")
        return letter

    def __repr__(self) -> str:
        return f"QuantumGroup(n={self.n})"


def make_algebra(n: int, step_budget: Optional[int] = None) -> QuantumGroup:
    """
    Shared, certified U_q(sl n).

    One instance is kept per (n, step_budget); None means the configured budget.
    """
    return _shared_algebra(n, step_budget)


@lru_cache(maxsize=None)
def _shared_algebra(n: int, step_budget: Optional[int]) -> QuantumGroup:
    return QuantumGroup(n, step_budget)
