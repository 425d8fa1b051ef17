"""
Noncommutative rewriting over a generator alphabet.

Words are tuples of hashable letters. A RewriteSystem reduces linear
combinations of words to normal form with leftmost-innermost rule
application, and checks the diamond-lemma condition by reducing both
branches of every overlap and inclusion ambiguity.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple

from algebra.errors import RuleOrderError, StepBudgetExceeded
from algebra.scalars import ONE, ZERO, Scalar, as_scalar
from config.settings import get_step_budget

logger = logging.getLogger(__name__)

Letter = Hashable
Word = Tuple[Letter, ...]

LEFTMOST = 'leftmost'
RIGHTMOST = 'rightmost'
STRATEGIES = (LEFTMOST, RIGHTMOST)


class FreeElement:
    """Finite linear combination of words with nonzero Scalar coefficients."""

    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Dict[Word, Scalar]] = None):
        self.terms: Dict[Word, Scalar] = {}
        for word, coeff in (terms or {}).items():
            coeff = as_scalar(coeff)
            if coeff:
                self.terms[tuple(word)] = coeff

    @classmethod
    def from_word(cls, word: Sequence[Letter], coeff=ONE) -> "FreeElement":
        return cls({tuple(word): coeff})

    @classmethod
    def unit(cls) -> "FreeElement":
        return cls({(): ONE})

    def _spawn(self, terms: Dict[Word, Scalar]) -> "FreeElement":
        # terms must already be free of zero coefficients
        element = self.__class__.__new__(self.__class__)
        FreeElement.__init__(element)
        element.terms = terms
        return element

    # container protocol
    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.terms)

    def items(self):
        return self.terms.items()

    def coefficient(self, word: Sequence[Letter]) -> Scalar:
        return self.terms.get(tuple(word), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # linear structure
    def __add__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        terms = dict(self.terms)
        for word, coeff in other.terms.items():
            total = terms.get(word)
            total = coeff if total is None else total + coeff
            if total:
                terms[word] = total
            else:
                terms.pop(word, None)
        return self._spawn(terms)

    def __neg__(self) -> "FreeElement":
        return self._spawn({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor) -> "FreeElement":
        factor = as_scalar(factor)
        if not factor:
            return self._spawn({})
        return self._spawn({w: c * factor for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, FreeElement):
            return self.concatenate(other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        return self.scale(as_scalar(other).inverse())

    def concatenate(self, other: "FreeElement") -> "FreeElement":
        """Product in the free algebra."""
        terms: Dict[Word, Scalar] = {}
        for u, a in self.terms.items():
            for w, b in other.terms.items():
                key = u + w
                total = terms.get(key)
                total = a * b if total is None else total + a * b
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
        result = FreeElement()
        result.terms = terms
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{'.'.join(map(str, w)) or '1'}" for w, c in self.terms.items())


def wrap(prefix: Word, element: FreeElement, suffix: Word) -> FreeElement:
    """prefix * element * suffix in the free algebra."""
    return FreeElement({prefix + w: c for w, c in element.items()})


class TermOrder:
    """
    Graded lexicographic order on words.

    Words compare by (total degree, length, letter ranks left to right).
    """

    def __init__(self, rank: Callable[[Letter], tuple], degree: Optional[Callable[[Letter], int]] = None,
                 alphabet: Optional[Sequence[Letter]] = None):
        self.rank = rank
        self.degree = degree or (lambda letter: 1)
        self.alphabet = tuple(alphabet) if alphabet is not None else None
        self._keys: Dict[Word, tuple] = {}

    @classmethod
    def from_alphabet(cls, alphabet: Sequence[Letter], degrees: Optional[Dict[Letter, int]] = None) -> "TermOrder":
        positions = {letter: (i,) for i, letter in enumerate(alphabet)}
        degrees = dict(degrees or {})
        return cls(positions.__getitem__, lambda letter: degrees.get(letter, 1), alphabet)

    def key(self, word: Word) -> tuple:
        cached = self._keys.get(word)
        if cached is None:
            cached = (sum(self.degree(x) for x in word), len(word), tuple(self.rank(x) for x in word))
            self._keys[word] = cached
        return cached

    def less(self, a: Word, b: Word) -> bool:
        return self.key(a) < self.key(b)


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: FreeElement = field(compare=False)
    name: str = field(default='', compare=False)

    def validate(self, order: TermOrder) -> None:
        if len(self.lhs) < 2:
            raise RuleOrderError(f"rule {self.label} has a left-hand side shorter than 2", witness=self.lhs)
        for word in self.rhs:
            if not order.less(word, self.lhs):
                raise RuleOrderError(f"rule {self.label}: {word} is not below {self.lhs}", witness=(self.lhs, word))

    @property
    def label(self) -> str:
        return self.name or ".".join(map(str, self.lhs))


class RuleFamily:
    """
    A parametrised rule scheme, e.g. commuting E past any group-like q^lam.

    ``apply`` returns the right-hand side for a matching window of ``arity``
    letters, or None.
    """

    def __init__(self, name: str, arity: int, apply: Callable[[Word], Optional[FreeElement]]):
        self.name = name
        self.arity = arity
        self._apply = apply
        self._memo: Dict[Word, Optional[FreeElement]] = {}

    def apply(self, window: Word) -> Optional[FreeElement]:
        try:
            return self._memo[window]
        except KeyError:
            result = self._memo[window] = self._apply(window)
            return result

    def instances(self, letters: Sequence[Letter]) -> List[RewriteRule]:
        found = []
        for window in itertools.product(letters, repeat=self.arity):
            rhs = self.apply(window)
            if rhs is not None:
                found.append(RewriteRule(window, rhs, f"{self.name}[{'.'.join(map(str, window))}]"))
        return found


class RewriteSystem:
    """An immutable rule set with memoised word reduction."""

    def __init__(self, order: TermOrder, rules: Iterable[RewriteRule] = (),
                 families: Iterable[RuleFamily] = (), probe_letters: Sequence[Letter] = (),
                 step_budget: Optional[int] = None, check_order: bool = True):
        self.order = order
        self.rules: Tuple[RewriteRule, ...] = tuple(rules)
        self.families: Tuple[RuleFamily, ...] = tuple(families)
        self.probe_letters = tuple(probe_letters)
        self.step_budget = step_budget
        if check_order:
            for rule in self.rules:
                rule.validate(order)
        self._index: Dict[Letter, List[RewriteRule]] = {}
        for rule in self.rules:
            self._index.setdefault(rule.lhs[0], []).append(rule)
        for bucket in self._index.values():
            bucket.sort(key=lambda r: len(r.lhs))
        self._caches: Dict[str, Dict[Word, Dict[Word, Scalar]]] = {s: {} for s in STRATEGIES}

    # ------------------------------------------------------------------
    def with_rules(self, extra: Iterable[RewriteRule]) -> "RewriteSystem":
        return RewriteSystem(self.order, self.rules + tuple(extra), self.families,
                             self.probe_letters, self.step_budget)

    def replace_rule(self, lhs: Word, rhs: FreeElement) -> "RewriteSystem":
        """Copy of the system with the rule for ``lhs`` given a new right-hand side."""
        rules = [RewriteRule(r.lhs, rhs, r.name) if r.lhs == tuple(lhs) else r for r in self.rules]
        return RewriteSystem(self.order, rules, self.families, self.probe_letters, self.step_budget)

    def rule_for(self, lhs: Word) -> Optional[RewriteRule]:
        for rule in self._index.get(lhs[0], ()):
            if rule.lhs == tuple(lhs):
                return rule
        return None

    def all_rules(self) -> List[RewriteRule]:
        """Concrete rules plus every family instance over the probe letters."""
        rules = list(self.rules)
        for family in self.families:
            rules.extend(family.instances(self.probe_letters))
        return rules

    # ------------------------------------------------------------------
    def _find_redex(self, word: Word, strategy: str) -> Optional[Tuple[int, int, FreeElement]]:
        size = len(word)
        positions = range(size - 1) if strategy == LEFTMOST else range(size - 2, -1, -1)
        for pos in positions:
            best = None
            for rule in self._index.get(word[pos], ()):
                length = len(rule.lhs)
                if word[pos:pos + length] == rule.lhs:
                    best = (length, rule.rhs)
                    break
            for family in self.families:
                if pos + family.arity > size or (best is not None and family.arity >= best[0]):
                    continue
                rhs = family.apply(word[pos:pos + family.arity])
                if rhs is not None:
                    best = (family.arity, rhs)
            if best is not None:
                return pos, best[0], best[1]
        return None

    def rewrite_once(self, word: Word, strategy: str = LEFTMOST) -> Optional[Dict[Word, Scalar]]:
        """One reduction step on the chosen redex, or None if ``word`` is irreducible."""
        found = self._find_redex(word, strategy)
        if found is None:
            return None
        pos, length, rhs = found
        prefix, suffix = word[:pos], word[pos + length:]
        return {prefix + w: c for w, c in rhs.items()}

    def is_normal(self, word: Word) -> bool:
        return self._find_redex(tuple(word), LEFTMOST) is None

    def reduce_word(self, word: Word, strategy: str = LEFTMOST) -> Dict[Word, Scalar]:
        """Normal form of a single word as a {word: coefficient} map."""
        word = tuple(word)
        cache = self._caches[strategy]
        hit = cache.get(word)
        if hit is not None:
            return hit
        budget = self.step_budget if self.step_budget is not None else get_step_budget()
        steps = 0
        pending: Dict[Word, Dict[Word, Scalar]] = {}
        stack = [word]
        while stack:
            current = stack[-1]
            if current in cache:
                stack.pop()
                continue
            expansion = pending.get(current)
            if expansion is None:
                steps += 1
                if steps > budget:
                    raise StepBudgetExceeded(f"step budget exceeded ({budget}) reducing {word}", witness=word)
                expansion = self.rewrite_once(current, strategy)
                if expansion is None:
                    cache[current] = {current: ONE}
                    stack.pop()
                    continue
                pending[current] = expansion
            missing = [w for w in expansion if w not in cache]
            if missing:
                for w in missing:
                    if w in pending:
                        raise StepBudgetExceeded(f"reduction cycle through {w}", witness=w)
                stack.extend(missing)
                continue
            result: Dict[Word, Scalar] = {}
            for w, c in expansion.items():
                for u, d in cache[w].items():
                    total = result.get(u)
                    total = c * d if total is None else total + c * d
                    if total:
                        result[u] = total
                    else:
                        del result[u]
            cache[current] = result
            del pending[current]
            stack.pop()
        return cache[word]

    def normal_form(self, x: FreeElement, strategy: str = LEFTMOST) -> FreeElement:
        terms: Dict[Word, Scalar] = {}
        for word, coeff in x.items():
            for u, d in self.reduce_word(word, strategy).items():
                total = terms.get(u)
                total = coeff * d if total is None else total + coeff * d
                if total:
                    terms[u] = total
                else:
                    del terms[u]
        return x._spawn(terms)


# ----------------------------------------------------------------------
# confluence
# ----------------------------------------------------------------------
@dataclass
class Ambiguity:
    word: Word
    left: FreeElement
    right: FreeElement
    rules: Tuple[str, str]
    kind: str = 'overlap'


@dataclass
class AmbiguityResult:
    ambiguity: Ambiguity
    resolved: bool
    difference: FreeElement


@dataclass
class ConfluenceReport:
    results: List[AmbiguityResult]

    @property
    def is_confluent(self) -> bool:
        return all(r.resolved for r in self.results)

    def failures(self) -> List[AmbiguityResult]:
        return [r for r in self.results if not r.resolved]

    def __len__(self) -> int:
        return len(self.results)

    def summary(self) -> str:
        bad = len(self.failures())
        return f"{len(self.results)} ambiguities, {bad} unresolved"


def enumerate_overlaps(system: RewriteSystem) -> List[Ambiguity]:
    """Every overlap and inclusion ambiguity among the rule left-hand sides."""
    rules = system.all_rules()
    found: List[Ambiguity] = []
    for i, first in enumerate(rules):
        a = first.lhs
        for j, second in enumerate(rules):
            b = second.lhs
            for k in range(1, min(len(a), len(b))):
                if a[-k:] == b[:k]:
                    found.append(Ambiguity(
                        a + b[k:],
                        wrap((), first.rhs, b[k:]),
                        wrap(a[:-k], second.rhs, ()),
                        (first.label, second.label),
                    ))
            if i == j or len(b) > len(a) or (len(b) == len(a) and j < i):
                continue
            for p in range(len(a) - len(b) + 1):
                if a[p:p + len(b)] == b:
                    found.append(Ambiguity(
                        a,
                        first.rhs,
                        wrap(a[:p], second.rhs, a[p + len(b):]),
                        (first.label, second.label),
                        'inclusion',
                    ))
    return found


def _resolve(system: RewriteSystem, ambiguity: Ambiguity) -> AmbiguityResult:
    difference = system.normal_form(ambiguity.left) - system.normal_form(ambiguity.right)
    if difference:
        logger.debug("unresolved ambiguity %s", ambiguity.word)
    return AmbiguityResult(ambiguity, not difference, difference)


def check_confluence(system: RewriteSystem, max_workers: Optional[int] = None) -> ConfluenceReport:
    """
    Reduce both branches of every ambiguity and compare.

    Args:
        system: a terminating rule set
        max_workers: resolve ambiguities in a thread pool; results keep the
            enumeration order either way

    Returns:
        ConfluenceReport whose ``is_confluent`` is the conjunction of all verdicts
    """
    ambiguities = enumerate_overlaps(system)
    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            results = list(pool.map(lambda amb: _resolve(system, amb), ambiguities))
    else:
        results = [_resolve(system, amb) for amb in ambiguities]
    report = ConfluenceReport(results)
    logger.info("confluence check: %s", report.summary())
    return report


# ----------------------------------------------------------------------
# JSON documents
# ----------------------------------------------------------------------
def element_to_records(element: FreeElement, encode: Callable[[Letter], str] = str) -> List[dict]:
    return [{'word': [encode(x) for x in w], 'coeff': c.to_string()} for w, c in element.items()]


def element_from_records(records: Sequence[dict], decode: Callable[[str], Letter] = lambda s: s) -> FreeElement:
    return FreeElement({tuple(decode(x) for x in r['word']): as_scalar(r['coeff']) for r in records})


def system_to_dict(system: RewriteSystem, encode: Callable[[Letter], str] = str) -> dict:
    """Serialise a rule set: alphabet, degrees, rules and family names."""
    document = {
        'alphabet': [encode(x) for x in system.order.alphabet] if system.order.alphabet is not None else None,
        'rules': [
            {'name': rule.name, 'lhs': [encode(x) for x in rule.lhs], 'rhs': element_to_records(rule.rhs, encode)}
            for rule in system.rules
        ],
        'families': [family.name for family in system.families],
        'probes': [encode(x) for x in system.probe_letters],
    }
    if system.order.alphabet is not None:
        document['degrees'] = {encode(x): system.order.degree(x) for x in system.order.alphabet}
    return document


def system_from_dict(document: dict, decode: Callable[[str], Letter] = lambda s: s,
                     order: Optional[TermOrder] = None,
                     families: Sequence[RuleFamily] = ()) -> RewriteSystem:
    """
    Rebuild a rule set written by system_to_dict.

    Documents for plain alphabets carry everything needed; algebra presets
    pass their own ``order`` and ``families``.
    """
    if order is None:
        if not document.get('alphabet'):
            raise ValueError("rule document has no alphabet and no order was supplied")
        alphabet = [decode(x) for x in document['alphabet']]
        degrees = {decode(k): int(d) for k, d in (document.get('degrees') or {}).items()}
        order = TermOrder.from_alphabet(alphabet, degrees)
    rules = [
        RewriteRule(tuple(decode(x) for x in r['lhs']), element_from_records(r['rhs'], decode), r.get('name', ''))
        for r in document['rules']
    ]
    probes = [decode(x) for x in document.get('probes', [])]
    return RewriteSystem(order, rules, families, probes)
