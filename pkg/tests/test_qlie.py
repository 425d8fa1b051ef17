"""
Test Quantum Lie Algebras

Tests for L-bar, the split K.C + L, the bracket table, sigma and gamma.
"""
import pytest

from algebra.errors import OrbitOverflowError
from algebra.linalg import kernel, row_reduce
from algebra.qlie import (AD_C_EIGENVALUE, build_Lbar, coproduct_split, format_coords, mutate_beta, split_L,
                          verify_axioms)
from algebra.reference import SL2_BRACKETS, SL3_BRACKETS
from algebra.scalars import ONE, Q, Q_INV, ZERO
from algebra.suites import sl2_elements
from config.constants import SL2_BASIS, SL3_BASIS


def expected_coords(qla, element):
    return [element.get(name, ZERO) for name in qla.names]


class TestLbar:
    """The ad-orbit of K_0."""

    def test_dimension_sl2(self, sl2):
        """Test dim L-bar = 4 for sl2."""
        basis, _ = build_Lbar(sl2)
        assert basis.rank == 4

    def test_dimension_cap(self, sl2):
        """Test that a small cap raises OrbitOverflowError."""
        with pytest.raises(OrbitOverflowError):
            build_Lbar(sl2, cap=2)

    def test_split(self, sl2):
        """Test that K_0 - C lies in L and C does not."""
        central, names, basis = split_L(sl2)
        assert names == SL2_BASIS
        assert len(basis) == 3
        assert sl2.is_central(central)


class TestSl2Algebra:
    """Structure of the three-dimensional algebra."""

    def test_names_and_dimension(self, qla2):
        """Test the named basis."""
        assert qla2.names == SL2_BASIS
        assert qla2.dim == 3
        assert len(qla2.lbar) == 4

    def test_closed_forms(self, qla2, sl2):
        """Test X+ = q^-H E, X- = q^-H F and the closed form of C."""
        closed = sl2_elements(sl2)
        assert qla2.element('X+') == closed['X+']
        assert qla2.element('X-') == closed['X-']
        assert qla2.element('X0') == closed['X0']
        assert qla2.C == closed['C']

    @pytest.mark.parametrize('pair', sorted(SL2_BRACKETS))
    def test_brackets(self, qla2, pair):
        """Test each bracket against the published table."""
        i, j = qla2.index(pair[0]), qla2.index(pair[1])
        assert qla2.beta[i][j] == expected_coords(qla2, SL2_BRACKETS[pair])

    def test_bracket_is_adjoint_action(self, qla2):
        """Test that beta rebuilds ad x(y)."""
        for i, j in qla2.pairs():
            assert qla2.bracket_element(i, j) == qla2.bracket(i, j)

    def test_ad_c_eigenvalue(self, qla2, sl2):
        """Test ad C = (q^2 - 1 + q^-2) on L."""
        for x in qla2.basis:
            assert sl2.ad(qla2.C, x) == x.scale(AD_C_EIGENVALUE)

    def test_coproduct_split(self, qla2):
        """Test that the C-component of Delta(x) is x."""
        for name, x in zip(qla2.names, qla2.basis):
            split = coproduct_split(qla2, x, name)
            assert split[-1] == x

    def test_gamma_is_one_minus_sigma(self, qla2):
        """Test d gamma + sigma = 1 column by column."""
        for pair in qla2.pairs():
            total = {k: c * AD_C_EIGENVALUE for k, c in qla2.gamma[pair].items()}
            for k, c in qla2.sigma[pair].items():
                total[k] = total.get(k, ZERO) + c
            total = {k: c for k, c in total.items() if c}
            assert total == {pair: ONE}

    def test_format_coords(self, qla2):
        """Test the compact element printer."""
        plus, minus = qla2.index('X+'), qla2.index('X-')
        assert format_coords(qla2, qla2.beta[plus][minus]) == "(q+q^-1) X0"
        assert format_coords(qla2, [ZERO] * 3) == "0"


class TestAxioms:
    """verify_axioms on real and corrupted tables."""

    def test_sl2_axioms_hold(self, qla2):
        """Test that every asserted axiom holds for sl2, braids included."""
        report = verify_axioms(qla2)
        assert report.passed, str(report)
        assert report.get("sigma-bar braid relation").verdict == 'holds'

    def test_braid_checks_skipped_above_limit(self, qla2):
        """Test that braid checks are skipped when gated off."""
        report = verify_axioms(qla2, braid_max_n=1)
        assert report.get("sigma braid relation").verdict == 'skipped'

    def test_mutated_beta_fails(self, qla2):
        """Test that a corrupted structure constant is caught."""
        plus, minus, zero = (qla2.index(n) for n in ('X+', 'X-', 'X0'))
        broken = mutate_beta(qla2, plus, minus, zero)
        assert broken.beta[plus][minus][zero] == qla2.beta[plus][minus][zero] + ONE
        report = verify_axioms(broken)
        assert not report.passed
        assert report.get("xy - m.sigma(x(x)y) = C[x,y]").verdict == 'fails'

    def test_mutation_leaves_original_untouched(self, qla2):
        """Test that mutate_beta copies."""
        before = qla2.beta[0][1][2]
        mutate_beta(qla2, 0, 1, 2, Q - Q_INV)
        assert qla2.beta[0][1][2] == before


@pytest.mark.slow
class TestSl3Algebra:
    """The eight-dimensional algebra for sl3."""

    def test_dimensions(self, qla3):
        """Test dim L-bar = 9 and dim L = 8."""
        assert qla3.names == SL3_BASIS
        assert len(qla3.lbar) == 9
        assert qla3.dim == 8

    @pytest.mark.parametrize('row', SL3_BASIS)
    def test_bracket_rows(self, qla3, row):
        """Test one row of the 64-entry table."""
        i = qla3.index(row)
        for j, column in enumerate(qla3.names):
            assert qla3.beta[i][j] == expected_coords(qla3, SL3_BRACKETS[(row, column)]), (row, column)

    def test_axioms(self, qla3):
        """Test the asserted axioms; braid checks are skipped for n = 3."""
        report = verify_axioms(qla3)
        assert report.passed, str(report)
        assert report.get("sigma-bar braid relation").verdict == 'skipped'

    def test_gamma_kernel_dimension(self, qla3):
        """Test dim ker gamma = 27 + 8 + 1 on the 64-dimensional L(x)L."""
        columns = [qla3.gamma[pair] for pair in qla3.pairs()]
        assert len(columns) == 64
        assert len(kernel(columns)) == 36
        assert row_reduce(columns).rank == 28

    def test_mutated_beta_fails(self, qla3):
        """Test that shifting the T1 coefficient of [X1, X-1] breaks the axioms."""
        x1, xm1, t1 = (qla3.index(name) for name in ('X1', 'X-1', 'T1'))
        broken = mutate_beta(qla3, x1, xm1, t1)
        report = verify_axioms(broken)
        assert not report.passed
        assert report.get("xy - m.sigma(x(x)y) = C[x,y]").verdict == 'fails'
        assert report.get("ad C = (q^2 - 1 + q^-2) id").verdict == 'holds'


@pytest.mark.slow
class TestRankFour:
    """L-bar for sl4."""

    def test_lbar_dimension(self, sl4):
        """Test dim L-bar = 16 for the vector representation of sl4."""
        basis, found = build_Lbar(sl4)
        assert basis.rank == 16
        assert len(found) == 16
