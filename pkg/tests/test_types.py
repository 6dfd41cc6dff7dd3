"""Tests for data types, values and the element ordering"""

from collections import Counter
from itertools import product

import pytest

from src.errors import ConformanceError
from src.order.types import (
    Fin,
    FinV,
    MSet,
    MSetV,
    Nat,
    NatV,
    Prod,
    Star,
    Sum,
    TagV,
    TupleV,
    WordV,
    type_depth,
    validate_type,
    value_conforms,
)
from src.order.values import enumerate_values, value_leq, value_size
from src.syntax.printer import format_type

AB = Fin.discrete(["a", "b"])
A_BELOW_B = Fin.from_pairs(["a", "b"], [("a", "b")])

# type, enumeration bound
ORDER_MENU = [
    (Nat(), 8),
    (Fin.from_pairs(["a", "b", "c"], [("a", "b")]), 1),
    (Prod((Nat(), Nat())), 6),
    (Sum((Nat(), AB)), 6),
    (Star(A_BELOW_B), 5),
    (MSet(A_BELOW_B), 6),
    (Star(Prod((Nat(), Fin.discrete(["a"])))), 8),
    (Star(Star(AB)), 5),
    (MSet(Star(AB)), 5),
    (Prod((MSet(AB), Sum((Nat(), Star(AB))))), 6),
]


def word(*letters):
    return WordV(tuple(FinV(a) for a in letters))


def bag(*letters):
    return MSetV(tuple(FinV(a) for a in letters))


class TestTypes:
    def test_from_pairs_closes_transitively(self):
        fin = Fin.from_pairs(["a", "b", "c"], [("a", "b"), ("b", "c")])
        assert fin.le("a", "c")
        assert fin.le("b", "b")
        assert not fin.le("c", "a")
        assert validate_type(fin) == []

    def test_maximal_symbols(self):
        fin = Fin.from_pairs(["a", "b", "c"], [("a", "b")])
        assert fin.maximal() == ["b", "c"]

    def test_invalid_relation_is_reported(self):
        fin = Fin(("a", "b"), frozenset({("a", "b"), ("b", "b")}))
        messages = [v.message for v in validate_type(fin)]
        assert "non-reflexive at a" in messages

    def test_non_transitive_relation_is_reported(self):
        pairs = {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}
        messages = [v.message for v in validate_type(Fin(("a", "b", "c"), frozenset(pairs)))]
        assert "non-transitive a,b,c" in messages

    def test_empty_carrier_and_duplicates(self):
        assert [v.message for v in validate_type(Fin(()))] == ["empty carrier"]
        duplicated = Fin.discrete(["a", "a"])
        assert "duplicate symbol a" in [v.message for v in validate_type(duplicated)]

    def test_nested_violation_path(self):
        violations = validate_type(Prod((Nat(), Star(Fin(())))))
        assert violations[0].path == "[1]*"

    def test_depth(self, ab):
        assert type_depth(Nat()) == 0
        assert type_depth(Star(ab)) == 1
        assert type_depth(MSet(Prod((Nat(), Star(ab))))) == 3


class TestConformance:
    def test_accepts_matching_shapes(self, ab):
        ty = Prod((Nat(), Sum((ab, Star(ab)))))
        value_conforms(ty, TupleV((NatV(3), TagV(1, word("a", "b")))))

    def test_reports_path_of_mismatch(self, ab):
        ty = Prod((Nat(), Star(ab)))
        with pytest.raises(ConformanceError) as raised:
            value_conforms(ty, TupleV((NatV(1), WordV((FinV("a"), FinV("z"))))))
        assert raised.value.path == ["[1]", "word[1]"]

    def test_rejects_negative_naturals(self):
        with pytest.raises(ConformanceError):
            value_conforms(Nat(), NatV(-1))

    def test_bags_are_normalised(self):
        assert bag("b", "a") == bag("a", "b")


class TestValueOrder:
    def test_subword_embedding(self, words_ab):
        assert value_leq(words_ab, word("a", "b"), word("b", "a", "a", "b"))
        assert not value_leq(words_ab, word("b", "b", "a"), word("a", "b", "a", "b"))
        assert value_leq(words_ab, word(), word())

    def test_embedding_uses_letter_order(self):
        ty = Star(Fin.from_pairs(["a", "b"], [("a", "b")]))
        assert value_leq(ty, word("a", "a"), word("b", "b"))
        assert not value_leq(ty, word("b"), word("a", "a"))

    def test_multiset_domination_needs_injective_matching(self):
        ty = MSet(Fin.from_pairs(["a", "b", "c"], [("a", "b"), ("a", "c")]))
        assert value_leq(ty, bag("a", "a"), bag("b", "c"))
        assert not value_leq(ty, bag("b", "b"), bag("b", "c"))
        assert not value_leq(ty, bag("a", "a", "a"), bag("b", "c"))

    def test_sums_compare_within_a_branch(self, ab):
        ty = Sum((Nat(), ab))
        assert value_leq(ty, TagV(0, NatV(1)), TagV(0, NatV(2)))
        assert not value_leq(ty, TagV(0, NatV(0)), TagV(1, FinV("a")))

    def test_mismatched_operand_raises(self, ab):
        with pytest.raises(ConformanceError):
            value_leq(Nat(), NatV(1), FinV("a"))


class TestEnumeration:
    def test_sizes_respect_bound(self, words_ab):
        values = enumerate_values(words_ab, 4)
        assert all(value_size(v) <= 4 for v in values)
        assert len(values) == 1 + 2 + 4 + 8
        assert len(set(values)) == len(values)

    def test_naturals_and_pairs(self, nat2):
        assert enumerate_values(Nat(), 3) == [NatV(0), NatV(1), NatV(2)]
        assert set(enumerate_values(nat2, 4)) == {
            TupleV((NatV(0), NatV(0))),
            TupleV((NatV(1), NatV(0))),
            TupleV((NatV(0), NatV(1))),
        }

    def test_multisets_are_unordered(self, ab):
        bags = enumerate_values(MSet(ab), 3)
        assert set(bags) == {bag(), bag("a"), bag("b"), bag("a", "a"), bag("a", "b"), bag("b", "b")}
        assert len(bags) == 6


def leq_table(ty, values):
    return [[value_leq(ty, u, v) for v in values] for u in values]


class TestOrderProperties:
    @pytest.mark.parametrize("ty, bound", ORDER_MENU, ids=[format_type(t) for t, _ in ORDER_MENU])
    def test_reflexive_and_transitive(self, ty, bound):
        values = enumerate_values(ty, bound)
        table = leq_table(ty, values)
        size = len(values)
        assert all(table[i][i] for i in range(size))
        for i, j in product(range(size), repeat=2):
            if not table[i][j]:
                continue
            for k in range(size):
                if table[j][k]:
                    assert table[i][k], (values[i], values[j], values[k])

    @pytest.mark.parametrize(
        "ty, bound",
        [(Star(AB), 7), (Star(Fin.discrete(["a", "b", "c"])), 5)],
        ids=["fin{a,b}*", "fin{a,b,c}*"],
    )
    def test_word_embedding_is_antisymmetric(self, ty, bound):
        values = enumerate_values(ty, bound)
        table = leq_table(ty, values)
        for i, j in product(range(len(values)), repeat=2):
            if table[i][j] and table[j][i]:
                assert values[i] == values[j]

    def test_multiset_order_is_multiplicity_wise(self):
        ty = MSet(Fin.discrete(["a", "b", "c"]))
        bags = enumerate_values(ty, 6)
        for u, v in product(bags, repeat=2):
            left = Counter(x.symbol for x in u.items)
            right = Counter(x.symbol for x in v.items)
            expected = all(left[s] <= right[s] for s in left)
            assert value_leq(ty, u, v) == expected, (u, v)

    def test_closure_of_a_cycle_makes_symbols_equivalent(self):
        fin = Fin.from_pairs(["a", "b", "c"], [("a", "b"), ("b", "a"), ("b", "c")])
        assert fin.le("a", "c") and fin.le("b", "a")
        assert not fin.le("c", "a")
        assert fin.maximal() == ["c"]
        assert validate_type(fin) == []
