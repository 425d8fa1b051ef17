"""
Test Rewriting

Tests for the term order, word reduction and the confluence checker.
"""
import pytest

from algebra.errors import RuleOrderError, StepBudgetExceeded
from algebra.rewrite import (LEFTMOST, RIGHTMOST, FreeElement, RewriteRule, RewriteSystem, TermOrder,
                             check_confluence, system_from_dict, system_to_dict)
from algebra.scalars import ONE, Q
from algebra.suites import y_relations


@pytest.fixture
def commuting():
    """b a -> q a b over the alphabet (a, b)."""
    order = TermOrder.from_alphabet(['a', 'b'])
    return RewriteSystem(order, [RewriteRule(('b', 'a'), FreeElement({('a', 'b'): Q}), 'b.a')])


class TestTermOrder:
    """Degree, then length, then letters."""

    def test_letter_order(self):
        """Test that earlier alphabet letters are smaller."""
        order = TermOrder.from_alphabet(['a', 'b'])
        assert order.less(('a', 'b'), ('b', 'a'))
        assert order.less(('b',), ('a', 'a'))

    def test_degree_dominates_length(self):
        """Test that a heavier letter outranks a longer word."""
        order = TermOrder.from_alphabet(['a', 'b'], {'b': 3})
        assert order.less(('a', 'a'), ('b',))


class TestReduction:
    """reduce_word and normal_form."""

    def test_sorting_word(self, commuting):
        """Test that b b a reduces to q^2 a b b."""
        assert commuting.reduce_word(('b', 'b', 'a')) == {('a', 'b', 'b'): Q * Q}

    def test_normal_words_are_fixed(self, commuting):
        """Test that an irreducible word is its own normal form."""
        assert commuting.reduce_word(('a', 'a', 'b')) == {('a', 'a', 'b'): ONE}
        assert commuting.is_normal(('a', 'b'))

    def test_strategies_agree(self, commuting):
        """Test leftmost and rightmost reduction on a confluent system."""
        word = ('b', 'a', 'b', 'a', 'a')
        assert commuting.reduce_word(word, LEFTMOST) == commuting.reduce_word(word, RIGHTMOST)

    def test_normal_form_is_linear(self, commuting):
        """Test normal_form on a sum of words."""
        x = FreeElement({('b', 'a'): ONE, ('a', 'b'): -Q})
        assert not commuting.normal_form(x)

    def test_step_budget(self):
        """Test that an exhausted budget raises StepBudgetExceeded."""
        order = TermOrder.from_alphabet(['a', 'b'])
        system = RewriteSystem(order, [RewriteRule(('b', 'a'), FreeElement({('a', 'b'): ONE}))], step_budget=2)
        with pytest.raises(StepBudgetExceeded):
            system.reduce_word(('b', 'b', 'a', 'a'))

    def test_rule_must_decrease(self):
        """Test that a rule whose right side is not smaller is rejected."""
        order = TermOrder.from_alphabet(['a', 'b'])
        with pytest.raises(RuleOrderError):
            RewriteSystem(order, [RewriteRule(('a', 'b'), FreeElement({('b', 'a'): ONE}))])


class TestConfluence:
    """Overlap enumeration and resolution."""

    def test_single_rule_has_no_ambiguities(self, commuting):
        """Test a rule that cannot overlap itself."""
        report = check_confluence(commuting)
        assert report.is_confluent
        assert len(report) == 0

    def test_y_relations_confluent(self):
        """Test that the (Y) rules resolve their only ambiguity."""
        report = check_confluence(y_relations())
        assert report.is_confluent
        assert len(report) == 1

    def test_mutated_y_relations_detected(self):
        """Test that changing one coefficient leaves Y+ Y0 Y- unresolved."""
        report = check_confluence(y_relations(mutated=True))
        assert not report.is_confluent
        assert report.failures()[0].ambiguity.word == ('Y+', 'Y0', 'Y-')
        assert report.failures()[0].difference

    def test_parallel_matches_serial(self):
        """Test that the thread pool gives the same verdicts."""
        serial = check_confluence(y_relations(mutated=True))
        parallel = check_confluence(y_relations(mutated=True), max_workers=4)
        assert [r.resolved for r in serial.results] == [r.resolved for r in parallel.results]

    def test_algebra_rules_confluent(self, sl2):
        """Test the certificate stored on U_q(sl 2)."""
        assert sl2.certificate.is_confluent
        assert len(sl2.certificate) > 0


class TestSerialization:
    """Rule documents."""

    def test_plain_system_round_trip(self):
        """Test that a plain rule set survives a dict round trip."""
        document = system_to_dict(y_relations())
        rebuilt = system_from_dict(document)
        assert system_to_dict(rebuilt) == document
        assert check_confluence(rebuilt).is_confluent

    def test_missing_alphabet(self):
        """Test that a document without an alphabet needs an order."""
        with pytest.raises(ValueError):
            system_from_dict({'alphabet': None, 'rules': []})
