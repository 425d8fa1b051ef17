"""
Verification suites: the sl2 and sl3 identities, the Hopf-algebra laws,
the K-sequence relations and the rewriting certificates.

Every suite returns a VerificationReport; nothing here raises on a failed
identity.
"""

import logging
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from algebra.errors import BracketEscapesError
from algebra.linalg import axpy, row_reduce
from algebra.qlie import (AD_C_EIGENVALUE, Pair, QuantumLieAlgebra, build_quantum_lie_algebra, format_coords,
                          format_tensor, jacobi_failures, make_quantum_lie_algebra, right_matrices, verify_axioms)
from algebra.reference import (SL2_BRACKETS, SL2_GAMMA_PRIME, SL3_BRACKETS, SL3_GAMMA_EIGENVALUES, SL3_GRADES,
                               SL3_HIGHEST_WEIGHT, SL3_HIGHEST_WEIGHT_GRADES, SL3_X12_STAR_SCALAR,
                               sl3_expected_ad)
from algebra.reports import VerificationReport
from algebra.rewrite import LEFTMOST, RIGHTMOST, FreeElement, RewriteRule, RewriteSystem, TermOrder, check_confluence
from algebra.scalars import ONE, Q, Q_INV, ZERO, Scalar, v_power
from algebra.uq import AlgebraElement, QuantumGroup, TensorElement, make_algebra
from config.settings import get_config

logger = logging.getLogger(__name__)

Q2 = Q + Q_INV
Q_MINUS_Q_INV = Q - Q_INV


# ----------------------------------------------------------------------
# the (Y) presentation of U(L) for sl2
# ----------------------------------------------------------------------
Y_ALPHABET = ('Y-', 'Y0', 'Y+')


def y_relations(mutated: bool = False) -> RewriteSystem:
    """
    Rules (Y) for the enveloping algebra of the sl2 quantum Lie algebra.

    With ``mutated`` the coefficient -q in the first rule becomes -q^-1,
    which breaks confluence.
    """
    order = TermOrder.from_alphabet(Y_ALPHABET)
    first = -Q_INV if mutated else -Q
    rules = [
        RewriteRule(('Y+', 'Y0'), FreeElement({('Y0', 'Y+'): Q * Q, ('Y+',): first}), 'Y+.Y0'),
        RewriteRule(('Y0', 'Y-'), FreeElement({('Y-', 'Y0'): Q * Q, ('Y-',): -Q}), 'Y0.Y-'),
        RewriteRule(('Y+', 'Y-'), FreeElement({
            ('Y-', 'Y+'): ONE,
            ('Y0', 'Y0'): -(Q * Q - Q_INV * Q_INV),
            ('Y0',): Q2,
        }), 'Y+.Y-'),
    ]
    return RewriteSystem(order, rules)


# ----------------------------------------------------------------------
# helpers
# ----------------------------------------------------------------------
def _coords_of(qla: QuantumLieAlgebra, element: Dict[str, Scalar]) -> List[Scalar]:
    return [element.get(name, ZERO) for name in qla.names]


def _tensor_of(qla: QuantumLieAlgebra, tensor: Dict[Tuple[str, str], Scalar]) -> Dict[Pair, Scalar]:
    return {(qla.index(a), qla.index(b)): c for (a, b), c in tensor.items()}


def apply_pair_map(matrix: Dict[Pair, Dict[Pair, Scalar]], vector: Dict[Pair, Scalar]) -> Dict[Pair, Scalar]:
    out: Dict[Pair, Scalar] = {}
    for pair, c in vector.items():
        axpy(out, c, matrix[pair])
    return out


def tensor_action(qla: QuantumLieAlgebra, u: AlgebraElement, vector: Dict[Pair, Scalar]) -> Dict[Pair, Scalar]:
    """(ad (x) ad) Delta(u) applied to a vector of L (x) L."""
    algebra = qla.algebra
    out: Dict[Pair, Scalar] = {}
    for (left, right), c in algebra.coproduct(u).items():
        for (a, b), w in vector.items():
            la = qla.coordinates(algebra.ad_word(left, qla.basis[a]))
            rb = qla.coordinates(algebra.ad_word(right, qla.basis[b]))
            if la is None or rb is None:
                raise BracketEscapesError("adjoint action leaves L", witness=(a, b))
            for k, x in enumerate(la):
                if not x:
                    continue
                for l, y in enumerate(rb):
                    if y:
                        axpy(out, c * w * x * y, {(k, l): ONE})
    return out


def _bracket_mismatches(qla: QuantumLieAlgebra, table, row: Optional[str] = None) -> List[str]:
    found = []
    for (a, b), expected in table.items():
        if row is not None and a != row:
            continue
        computed = qla.beta[qla.index(a)][qla.index(b)]
        if computed != _coords_of(qla, expected):
            found.append(f"[{a},{b}] = {format_coords(qla, computed)}")
    return found


# ----------------------------------------------------------------------
# sl2
# ----------------------------------------------------------------------
def sl2_elements(algebra: QuantumGroup) -> Dict[str, AlgebraElement]:
    """The closed forms of X+, X-, X0 and C in terms of E, F and q^H."""
    E, F = algebra.E(1), algebra.F(1)
    q_minus_h = algebra.qH(1, -1)
    ef, fe = algebra.multiply(E, F), algebra.multiply(F, E)
    middle = ef.scale(Q) - fe.scale(Q_INV)
    return {
        'X+': algebra.multiply(q_minus_h, E),
        'X-': algebra.multiply(q_minus_h, F),
        'X0': middle.scale(Q2.inverse()),
        'C': algebra.qH(1, -2) + middle.scale(Q_MINUS_Q_INV / Q2),
    }


def independence_rank(qla: QuantumLieAlgebra, degree: int) -> Tuple[int, int]:
    """
    Rank of the normal forms of X-^l X0^m X+^n and C X-^l X0^m X+^n, l+m+n <= degree.

    Returns:
        (number of monomials, rank)
    """
    algebra = qla.algebra
    x_plus, x_minus, x_zero = (qla.element(name) for name in ('X+', 'X-', 'X0'))

    def powers(x):
        table = [algebra.one()]
        for _ in range(degree):
            table.append(algebra.multiply(table[-1], x))
        return table

    p_minus, p_zero, p_plus = powers(x_minus), powers(x_zero), powers(x_plus)
    vectors = []
    for total in range(degree + 1):
        for l in range(total + 1):
            for m in range(total - l + 1):
                n = total - l - m
                monomial = algebra.multiply(algebra.multiply(p_minus[l], p_zero[m]), p_plus[n])
                vectors.append(dict(monomial.terms))
                vectors.append(dict(algebra.multiply(qla.C, monomial).terms))
    basis = row_reduce(vectors, algebra.word_key)
    return len(vectors), len(basis)


def sl2_suite(qla: Optional[QuantumLieAlgebra] = None, degree: Optional[int] = None) -> VerificationReport:
    """Every sl2 identity: closed forms, brackets, gamma, (XC), Casimir, (Y) and independence."""
    qla = qla or make_quantum_lie_algebra(2)
    degree = degree if degree is not None else get_config().INDEPENDENCE_DEGREE
    algebra = qla.algebra
    report = VerificationReport("sl2")

    closed = sl2_elements(algebra)
    for name in ('X+', 'X-', 'X0'):
        report.record(f"{name} closed form", qla.element(name) == closed[name],
                      witness={'computed': str(qla.element(name)), 'closed form': str(closed[name])})
    report.record("C closed form", qla.C == closed['C'], witness={'computed': str(qla.C)})
    x0_from_c = (qla.C - algebra.qH(1, -2)).scale(Q_MINUS_Q_INV.inverse())
    report.record("X0 = (C - q^-2H)/(q - q^-1)", x0_from_c == qla.element('X0'))

    bad = _bracket_mismatches(qla, SL2_BRACKETS)
    report.record("bracket table", not bad, detail="9 brackets", witness={'mismatches': bad})

    # gamma' = (q^2 - 1 + q^-2) gamma = 1 - sigma
    bad = []
    for pair, expected in SL2_GAMMA_PRIME.items():
        i, j = qla.index(pair[0]), qla.index(pair[1])
        computed = {k: c * AD_C_EIGENVALUE for k, c in qla.gamma[(i, j)].items()}
        if computed != _tensor_of(qla, expected):
            bad.append(f"gamma'({pair[0]}(x){pair[1]}) = {format_tensor(qla, computed)}")
    report.record("gamma' table", not bad, witness={'mismatches': bad})
    z = qla.index('X0')
    zero_zero = {k: c * AD_C_EIGENVALUE for k, c in qla.gamma[(z, z)].items()}
    report.record("gamma'(X0(x)X0)", bool(zero_zero), asserted=False, detail=format_tensor(qla, zero_zero))

    # gamma^2 = ((q^2 + q^-2)/d) gamma
    factor = (Q * Q + Q_INV * Q_INV) / AD_C_EIGENVALUE
    bad = []
    for pair in qla.pairs():
        square = apply_pair_map(qla.gamma, qla.gamma[pair])
        if square != {k: c * factor for k, c in qla.gamma[pair].items()}:
            bad.append(str(pair))
    report.record("gamma^2 = ((q^2 + q^-2)/d) gamma", not bad, witness={'pairs': bad})

    failures = jacobi_failures(qla, right_matrices(qla), right=True)
    report.record("balanced", not failures, witness={'pairs': [str(p) for p in failures]})

    # relations (XC)
    xp, xm, x0, C = qla.element('X+'), qla.element('X-'), qla.element('X0'), qla.C
    mul = algebra.multiply
    relations = [
        ("q^2 X0X+ - X+X0 = q C X+", mul(x0, xp).scale(Q * Q) - mul(xp, x0), mul(C, xp).scale(Q)),
        ("q^-2 X0X- - X-X0 = -q^-1 C X-", mul(x0, xm).scale(Q_INV * Q_INV) - mul(xm, x0), mul(C, xm).scale(-Q_INV)),
        ("X+X- - X-X+ + (q^2 - q^-2) X0^2 = (q + q^-1) C X0",
         mul(xp, xm) - mul(xm, xp) + mul(x0, x0).scale(Q * Q - Q_INV * Q_INV), mul(C, x0).scale(Q2)),
    ]
    for name, left, right in relations:
        report.record(name, left == right, witness={'left': str(left), 'right': str(right)})

    casimir = (mul(x0, x0) + (mul(xm, xp).scale(Q) + mul(xp, xm).scale(Q_INV)).scale(Q2.inverse()))
    casimir = casimir.scale(Q_MINUS_Q_INV * Q_MINUS_Q_INV) + algebra.one()
    report.record("Casimir relation", mul(C, C) == casimir, witness={'C^2': str(mul(C, C))})

    c2 = mul(x0, x0).scale(Q2) + mul(xm, xp).scale(Q) + mul(xp, xm).scale(Q_INV)
    commutes = all(algebra.commutator(c2, x) == 0 for x in (xp, xm, x0))
    report.record("C2 commutes with X0, X+, X-", commutes)

    report.record("(Y) rules confluent", check_confluence(y_relations()).is_confluent)
    report.record("(Y) mutated rules detected", not check_confluence(y_relations(mutated=True)).is_confluent)

    count, rank = independence_rank(qla, degree)
    report.record(f"degree <= {degree} independence", count == rank, detail=f"{rank} of {count}")
    return report


# ----------------------------------------------------------------------
# sl3
# ----------------------------------------------------------------------
def _w_grade(tensor: Dict[Tuple[str, str], Scalar]) -> set:
    grades = set()
    for a, b in tensor:
        ga = SL3_GRADES.get(a, (0, 0))
        gb = SL3_GRADES.get(b, (0, 0))
        grades.add((ga[0] + gb[0], ga[1] + gb[1]))
    return grades


class HighestWeightCheck(NamedTuple):
    """Weight, annihilation and gamma outcomes for one tabulated sl3 vector."""

    label: str
    grades: List[Tuple[int, int]]
    expected_grade: Tuple[int, int]
    annihilated: bool
    image: Dict[Pair, Scalar]
    eigenvector: bool

    @property
    def has_weight(self) -> bool:
        return self.grades == [self.expected_grade]

    @property
    def holds(self) -> bool:
        return self.has_weight and self.annihilated and self.eigenvector


def highest_weight_checks(qla: QuantumLieAlgebra) -> List[HighestWeightCheck]:
    """Run every tabulated W vector through the weight, E-annihilation and gamma checks."""
    algebra = qla.algebra
    e_generators = [algebra.E(1), algebra.E(2)]
    checks = []
    for label, tensor in SL3_HIGHEST_WEIGHT.items():
        vector = _tensor_of(qla, tensor)
        image = apply_pair_map(qla.gamma, vector)
        eigenvalue = SL3_GAMMA_EIGENVALUES[label]
        expected = {k: c * eigenvalue for k, c in vector.items() if c * eigenvalue}
        checks.append(HighestWeightCheck(
            label=label,
            grades=sorted(_w_grade(tensor)),
            expected_grade=SL3_HIGHEST_WEIGHT_GRADES[label],
            annihilated=all(not tensor_action(qla, e, vector) for e in e_generators),
            image=image,
            eigenvector=image == expected,
        ))
    return checks


def x12_star_scalar(qla: QuantumLieAlgebra) -> Tuple[bool, Optional[Scalar]]:
    """
    Compare q^(1/2)(q + q^-1) C X12 + q(q - q^-1) m(W8s) with the highest
    root vector of the mirrored algebra (lambda = omega_2).

    Returns:
        (proportional, scalar) where element = scalar * highest vector
    """
    algebra = qla.algebra
    y12 = algebra.zero()
    for (a, b), c in SL3_HIGHEST_WEIGHT['W8s'].items():
        y12 = y12 + algebra.multiply(qla.element(a), qla.element(b)).scale(c)
    element = (algebra.multiply(qla.C, qla.element('X12')).scale(v_power(1) * Q2)
               + y12.scale(Q * Q_MINUS_Q_INV))
    k0_star = algebra.K_sequence(algebra.fundamental_weight(2), 0)
    target = algebra.ad_E(1, algebra.ad_E(2, k0_star)).scale(Q_MINUS_Q_INV.inverse())
    if not target:
        return False, None
    word = next(iter(target.terms))
    ratio = element.terms.get(word, ZERO) / target.terms[word]
    return element == target.scale(ratio), ratio


def sl3_suite(qla: Optional[QuantumLieAlgebra] = None) -> VerificationReport:
    """Figure-level checks for sl3: brackets, ad tables, highest weights, gamma spectrum."""
    qla = qla or make_quantum_lie_algebra(3)
    algebra = qla.algebra
    report = VerificationReport("sl3")

    for row in qla.names:
        bad = _bracket_mismatches(qla, SL3_BRACKETS, row)
        report.record(f"brackets row {row}", not bad, witness={'mismatches': bad})

    bad = []
    for i in (1, 2):
        for kind, act in (('E', algebra.ad_E), ('F', algebra.ad_F)):
            for name, x in zip(qla.names, qla.basis):
                computed = qla.coordinates(act(i, x))
                if computed != _coords_of(qla, sl3_expected_ad(kind, i, name)):
                    bad.append(f"ad {kind}{i}({name})")
        h = algebra.simple_root(i)
        for name, grade in SL3_GRADES.items():
            x = qla.element(name)
            if algebra.ad(algebra.qH(i), x) != x.scale(v_power(h.v_exponent(grade))):
                bad.append(f"ad q^H{i}({name})")
    report.record("adjoint action table", not bad, witness={'mismatches': bad})

    for check in highest_weight_checks(qla):
        label = check.label
        report.record(f"{label} has weight {check.expected_grade}", check.has_weight, detail=str(check.grades))
        report.record(f"{label} is highest-weight", check.annihilated)
        report.record(f"gamma {label} = ({SL3_GAMMA_EIGENVALUES[label]}) {label}", check.eigenvector,
                      witness={'image': format_tensor(qla, check.image)})

    w1 = _tensor_of(qla, SL3_HIGHEST_WEIGHT['W1'])
    beta_w1 = [ZERO] * qla.dim
    for (a, b), c in w1.items():
        beta_w1 = [s + c * t for s, t in zip(beta_w1, qla.beta[a][b])]
    report.record("beta(W1) = 0", not any(beta_w1), witness={'value': format_coords(qla, beta_w1)})
    operator_nonzero = False
    for j, y in enumerate(qla.basis):
        total = algebra.zero()
        for (a, b), c in w1.items():
            total = total + algebra.ad(qla.basis[a], algebra.ad(qla.basis[b], y)).scale(c)
        if total:
            operator_nonzero = True
            break
    report.record("m(ad (x) ad)(W1) != 0", operator_nonzero)

    failures = jacobi_failures(qla, right_matrices(qla), right=True)
    report.record("balanced", not failures, asserted=False)

    proportional, ratio = x12_star_scalar(qla)
    report.record("X12* on the highest-weight line of L*", proportional,
                  detail=f"scalar {ratio}" if ratio is not None else '')
    report.record("X12* scalar", ratio == SL3_X12_STAR_SCALAR, asserted=False,
                  detail=f"expected {SL3_X12_STAR_SCALAR}")

    star = build_quantum_lie_algebra(algebra, algebra.fundamental_weight(2), with_sigma=False)
    report.record("dim L* = 8", star.dim == 8, detail=str(star.dim))
    return report


# ----------------------------------------------------------------------
# Hopf laws
# ----------------------------------------------------------------------
def _word(algebra: QuantumGroup, word) -> AlgebraElement:
    return algebra.element_unchecked({word: ONE})


def _triple_left(algebra: QuantumGroup, x: AlgebraElement) -> TensorElement:
    """(Delta (x) id) Delta(x)."""
    total = TensorElement(algebra)
    for (left, right), c in algebra.coproduct(x).items():
        inner = algebra.coproduct(_word(algebra, left))
        total = total + TensorElement(algebra, {(a, b, right): c * d for (a, b), d in inner.items()})
    return total


def _triple_right(algebra: QuantumGroup, x: AlgebraElement) -> TensorElement:
    total = TensorElement(algebra)
    for (left, right), c in algebra.coproduct(x).items():
        inner = algebra.coproduct(_word(algebra, right))
        total = total + TensorElement(algebra, {(left, a, b): c * d for (a, b), d in inner.items()})
    return total


def hopf_suite(algebra: QuantumGroup, samples: Optional[int] = None, seed: Optional[int] = None) -> VerificationReport:
    """
    Hopf-algebra and adjoint-action laws on random elements.

    Args:
        algebra: U_q(sl n)
        samples: samples per law (defaults to the configured count)
        seed: sampler seed (defaults to the configured seed)
    """
    from utils.sampling import ElementSampler

    samples = samples or get_config().SAMPLE_COUNT
    sampler = ElementSampler(algebra, seed)
    report = VerificationReport(f"hopf sl({algebra.n})")
    mul = algebra.multiply

    def first_failure(law):
        for index in range(samples):
            witness = law()
            if witness is not None:
                return {'sample': index, **witness}
        return None

    def coassociative():
        x = sampler.element()
        if _triple_left(algebra, x) != _triple_right(algebra, x):
            return {'x': str(x)}

    def counit():
        x = sampler.element()
        left, right = algebra.zero(), algebra.zero()
        for (a, b), c in algebra.coproduct(x).items():
            left = left + _word(algebra, b).scale(c * algebra.counit(_word(algebra, a)))
            right = right + _word(algebra, a).scale(c * algebra.counit(_word(algebra, b)))
        if left != x or right != x:
            return {'x': str(x)}

    def antipode():
        x = sampler.element()
        unit = algebra.one().scale(algebra.counit(x))
        left, right = algebra.zero(), algebra.zero()
        for (a, b), c in algebra.coproduct(x).items():
            left = left + mul(algebra.antipode(_word(algebra, a)), _word(algebra, b)).scale(c)
            right = right + mul(_word(algebra, a), algebra.antipode(_word(algebra, b))).scale(c)
        if left != unit or right != unit:
            return {'x': str(x)}

    def representation():
        x, y, z = sampler.small_element(), sampler.small_element(), sampler.element()
        if algebra.ad_hopf(mul(x, y), z) != algebra.ad_hopf(x, algebra.ad_hopf(y, z)):
            return {'x': str(x), 'y': str(y), 'z': str(z)}

    def closed_form():
        x, z = sampler.element(), sampler.element()
        if algebra.ad(x, z) != algebra.ad_hopf(x, z):
            return {'x': str(x), 'z': str(z)}

    def derivation():
        x, y, z = sampler.small_element(), sampler.element(), sampler.element()
        right = algebra.zero()
        for (a, b), c in algebra.coproduct(x).items():
            right = right + mul(algebra.ad_word(a, y), algebra.ad_word(b, z)).scale(c)
        if algebra.ad(x, mul(y, z)) != right:
            return {'x': str(x), 'y': str(y), 'z': str(z)}

    def jacobi():
        x, y, z = sampler.small_element(), sampler.small_element(), sampler.element()
        right = algebra.zero()
        for (a, b), c in algebra.coproduct(x).items():
            right = right + algebra.ad(algebra.ad_word(a, y), algebra.ad_word(b, z)).scale(c)
        if algebra.ad(x, algebra.ad(y, z)) != right:
            return {'x': str(x), 'y': str(y), 'z': str(z)}

    def jacobi_antipode():
        x, y, z = sampler.small_element(), sampler.small_element(), sampler.element()
        right = algebra.zero()
        for (a, b), c in algebra.coproduct(x).items():
            inner = algebra.ad(algebra.antipode(_word(algebra, b)), z)
            right = right + algebra.ad_word(a, algebra.ad(y, inner)).scale(c)
        if algebra.ad(algebra.ad(x, y), z) != right:
            return {'x': str(x), 'y': str(y), 'z': str(z)}

    laws = [
        ("coassociativity", coassociative),
        ("counit", counit),
        ("antipode", antipode),
        ("ad(xy) = ad x ad y", representation),
        ("closed-form ad = Hopf ad", closed_form),
        ("ad derivation law", derivation),
        ("Jacobi: ad x ad y = sum ad(ad x1 y) ad x2", jacobi),
        ("Jacobi: ad(ad x y) = sum ad x1 ad y ad S(x2)", jacobi_antipode),
    ]
    for name, law in laws:
        witness = first_failure(law)
        report.record(name, witness is None, detail=f"{samples} samples", witness=witness)
    return report


# ----------------------------------------------------------------------
# K-relations, confluence, axioms
# ----------------------------------------------------------------------
def k_relations_suite(algebra: QuantumGroup) -> VerificationReport:
    return algebra.verify_K_relations()


def confluence_suite(algebra: QuantumGroup, extra: Sequence[Tuple[str, RewriteSystem]] = (),
                     max_workers: Optional[int] = None, seed: Optional[int] = None) -> VerificationReport:
    """
    Diamond-lemma certificates for the algebra rules, (Y), and any extra rule sets.

    Also compares leftmost and rightmost reduction on random words.
    """
    from utils.sampling import ElementSampler

    report = VerificationReport(f"confluence sl({algebra.n})")
    certificate = check_confluence(algebra.rules, max_workers)
    bad = certificate.failures()
    report.record(f"U_q(sl {algebra.n}) rules confluent", not bad, detail=certificate.summary(),
                  witness={'ambiguity': algebra.format_word(bad[0].ambiguity.word)} if bad else None)
    report.record("(Y) rules confluent", check_confluence(y_relations(), max_workers).is_confluent)
    report.record("(Y) mutated rules detected", not check_confluence(y_relations(True), max_workers).is_confluent)
    for name, system in extra:
        result = check_confluence(system, max_workers)
        failures = result.failures()
        report.record(f"{name} confluent", result.is_confluent, detail=result.summary(),
                      witness={'ambiguity': str(failures[0].ambiguity.word)} if failures else None)

    sampler = ElementSampler(algebra, seed)
    mismatch = None
    for _ in range(get_config().SAMPLE_COUNT):
        word = sampler.word()
        if algebra.rules.reduce_word(word, LEFTMOST) != algebra.rules.reduce_word(word, RIGHTMOST):
            mismatch = {'word': algebra.format_word(word)}
            break
    report.record("leftmost and rightmost normal forms agree", mismatch is None, witness=mismatch)
    return report


def axioms_suite(qla: QuantumLieAlgebra) -> VerificationReport:
    return verify_axioms(qla)


def run_suite(name: str, n: int, qla: Optional[QuantumLieAlgebra] = None,
              extra_rules: Sequence[Tuple[str, RewriteSystem]] = (),
              max_workers: Optional[int] = None, step_budget: Optional[int] = None) -> VerificationReport:
    """Dispatch one named suite for U_q(sl n); step_budget None means the configured budget."""
    algebra = make_algebra(n, step_budget)
    logger.info("running suite %s for sl(%d)", name, n)
    if name == 'axioms':
        return axioms_suite(qla or make_quantum_lie_algebra(n, step_budget))
    if name == 'k-relations':
        return k_relations_suite(algebra)
    if name == 'sl2':
        return sl2_suite(make_quantum_lie_algebra(2, step_budget))
    if name == 'sl3':
        return sl3_suite(make_quantum_lie_algebra(3, step_budget))
    if name == 'confluence':
        return confluence_suite(algebra, extra_rules, max_workers)
    if name == 'hopf':
        return hopf_suite(algebra)
    raise ValueError(f"unknown suite {name}")
