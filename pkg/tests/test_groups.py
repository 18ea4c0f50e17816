import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.matrix import Mat2Q
from autgroup.groups import (
    CLASS_REPRESENTATIVES,
    AutResult,
    GroupClass,
    MatrixGroup,
    classify_group,
    conjugate_group,
    group_closure,
    group_from_json,
    minimal_generators,
    representative,
)
from errors import GroupClosureError, SingularMatrixError

small = st.integers(min_value=-3, max_value=3)
invertible = st.tuples(small, small, small, small).map(lambda e: Mat2Q.of(*e)).filter(lambda m: m.det != 0)


class TestClassification:
    @pytest.mark.parametrize("label", list(GroupClass))
    def test_representatives(self, label):
        group = representative(label)
        assert group.order == label.order
        assert classify_group(group) == label

    @given(st.sampled_from(list(GroupClass)), invertible)
    def test_invariant_under_conjugation(self, label, by):
        conj = conjugate_group(representative(label), by)
        assert classify_group(conj) == label
        assert conj.order == label.order

    def test_minus_identity_is_c2(self):
        assert classify_group(group_closure([-Mat2Q.identity()])) == GroupClass.C2
        assert classify_group(group_closure([Mat2Q.diag(1, -1)])) == GroupClass.D1

    def test_cyclic_flags(self):
        assert GroupClass.C6.is_cyclic
        assert not GroupClass.D3.is_cyclic
        assert GroupClass.D6.order == 12


class TestClosure:
    def test_infinite_order_generator(self):
        with pytest.raises(GroupClosureError):
            group_closure([Mat2Q.diag(2, 1)])
        with pytest.raises(GroupClosureError):
            group_closure([Mat2Q.of(1, 1, 0, 1)])

    def test_singular_generator(self):
        with pytest.raises(SingularMatrixError):
            group_closure([Mat2Q.of(1, 1, 1, 1)])

    def test_identity_required(self):
        with pytest.raises(GroupClosureError):
            MatrixGroup(frozenset({Mat2Q.diag(1, -1)}))

    @pytest.mark.parametrize("label", list(GroupClass))
    def test_minimal_generators_regenerate(self, label):
        group = representative(label)
        gens = minimal_generators(group)
        assert len(gens) <= 2
        assert group_closure(gens).elements == group.elements

    def test_from_json(self):
        group = group_from_json([[0, 1, 1, 0], [0, 1, -1, 0]])
        assert classify_group(group) == GroupClass.D4
        assert group.is_integral

    def test_json_lists_sorted_elements(self):
        out = representative(GroupClass.C3).to_json()
        assert out["order"] == 3
        assert out["class"] == "C3"
        assert len(out["elements"]) == 3
        assert [list(m.to_json()) for m in representative(GroupClass.C3)] == out["elements"]


class TestAutResult:
    def test_index_one_or_two(self):
        c3 = representative(GroupClass.C3)
        c6 = group_closure(list(CLASS_REPRESENTATIVES[GroupClass.C3]) + [-Mat2Q.identity()])
        result = AutResult(aut=c3, aut_abs=c6)
        assert result.index == 2
        assert result.classes == (GroupClass.C3, GroupClass.C6)

    def test_rejects_large_index(self):
        with pytest.raises(GroupClosureError):
            AutResult(aut=MatrixGroup.trivial(), aut_abs=representative(GroupClass.D4))

    def test_rejects_non_subgroup(self):
        with pytest.raises(GroupClosureError):
            AutResult(aut=representative(GroupClass.D1), aut_abs=representative(GroupClass.C2))
