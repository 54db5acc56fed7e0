from typing import List

import pytest

from hypothesis import given, settings, strategies as st

from pfister_check.bit_vector import (
    all_bit_vectors,
    bit_vector_from_index,
    bit_vector_index,
    format_bit_vector,
    minimal_index,
)
from pfister_check.char2_linalg import (
    FrobCoords,
    Subspace,
    combine,
    frob_coords,
    intersect,
    kernel,
    member,
    rank,
    reconstruct,
    solve,
    span,
    span_of_elements,
    sum_space,
    two_independent,
)
from pfister_check.errors import ArityError, DomainMismatchError, ZeroEntryError
from pfister_check.expr_parser import parse_expr
from pfister_check.rat_func import RatFunc
from pfister_check.scalar_domain import F2, RAT

from tests.strategies import f2_slots, rat_funcs


def f2(src: str, n: int = 2) -> RatFunc:
    return parse_expr(src, n, F2)


def coords(*sources: str) -> List[RatFunc]:
    return [f2(src) for src in sources]


class TestBitVector:
    def test_first_coordinate_is_least_significant(self) -> None:
        assert all_bit_vectors(2) == [(0, 0), (1, 0), (0, 1), (1, 1)]
        assert bit_vector_index((0, 1, 1)) == 6
        assert bit_vector_from_index(5, 3) == (1, 0, 1)

    def test_minimal_index(self) -> None:
        assert minimal_index((0, 1, 1)) == 1
        with pytest.raises(ValueError):
            minimal_index((0, 0))

    def test_format(self) -> None:
        assert format_bit_vector((0, 1)) == '(0,1)'


class TestFrobCoords:
    def test_examples(self) -> None:
        assert list(frob_coords(f2('x1')).coords) == coords('0', '1', '0', '0')
        assert list(frob_coords(f2('1 + x1*x2')).coords) == coords('1', '0', '0', '1')
        assert list(frob_coords(f2('x1^3')).coords) == coords('0', 'x1', '0', '0')
        assert list(frob_coords(f2('1/x2')).coords) == coords('0', '0', '1/x2', '0')

    def test_needs_f2(self) -> None:
        with pytest.raises(DomainMismatchError):
            frob_coords(parse_expr('x1', 2, RAT))

    def test_square_root_transport(self) -> None:
        f, g = f2('x1 + x2^3'), f2('(x1 + 1)/x2')
        assert frob_coords(g * g * f) == frob_coords(f).scale(g)

    @given(st.integers(min_value=1, max_value=3).flatmap(
        lambda n: rat_funcs(n=n, domain=F2, max_degree=6)))
    @settings(max_examples=1000, deadline=None)
    def test_roundtrip(self, f: RatFunc) -> None:
        assert reconstruct(frob_coords(f)) == f

    @given(rat_funcs(domain=F2), rat_funcs(domain=F2))
    @settings(max_examples=200, deadline=None)
    def test_additive(self, f: RatFunc, g: RatFunc) -> None:
        assert frob_coords(f + g) == frob_coords(f) + frob_coords(g)


class TestSubspaces:
    def test_span_dimensions(self) -> None:
        assert span([FrobCoords(2, tuple(coords('1', '0', '0', '0')))]).dimension == 1
        assert span_of_elements(coords('x1', 'x1*x2^2'), 2).dimension == 1
        assert span_of_elements(coords('x1', 'x2', 'x1*x2'), 2).dimension == 3
        assert span([], 2).dimension == 0

    def test_membership(self) -> None:
        subspace = span_of_elements(coords('x1', 'x2', 'x1*x2'), 2)
        x1 = member(f2('x1'), subspace)
        assert x1.is_member
        assert x1.combination is not None
        assert combine(x1.combination, subspace.basis_elements()) == f2('x1')
        assert not member(f2('1 + x1'), subspace).is_member
        zero = member(RatFunc.zero(2, F2), subspace)
        assert zero.is_member
        assert zero.combination is not None
        assert all(c.is_zero() for c in zero.combination)

    def test_membership_with_square_coefficients(self) -> None:
        subspace = span_of_elements(coords('x1', 'x2'), 2)
        assert member(f2('x1^3 + x2/x1^2'), subspace).is_member
        assert not member(f2('x1*x2'), subspace).is_member

    def test_intersection(self) -> None:
        a = span_of_elements(coords('x1', 'x2'), 2)
        b = span_of_elements(coords('x2', 'x1*x2'), 2)
        common = intersect(a, b)
        assert common.dimension == 1
        assert member(f2('x2'), common).is_member
        assert intersect(a, a).dimension == 2
        assert intersect(a, Subspace.zero_space(2)).dimension == 0

    def test_sum_space(self) -> None:
        a = span_of_elements(coords('x1'), 2)
        b = span_of_elements(coords('x2', 'x1'), 2)
        assert sum_space(a, b).dimension == 2

    @given(st.lists(rat_funcs(domain=F2), max_size=3), st.lists(rat_funcs(domain=F2), max_size=3))
    @settings(max_examples=500, deadline=None)
    def test_dimension_formula(self, first: List[RatFunc], second: List[RatFunc]) -> None:
        a = span_of_elements(first, 2)
        b = span_of_elements(second, 2)
        assert a.dimension + b.dimension == \
            sum_space(a, b).dimension + intersect(a, b).dimension

    @given(st.lists(rat_funcs(domain=F2), min_size=1, max_size=3), rat_funcs(domain=F2))
    @settings(max_examples=200, deadline=None)
    def test_membership_agrees_with_rank(self, elements: List[RatFunc], f: RatFunc) -> None:
        subspace = span_of_elements(elements, 2)
        grown = rank([frob_coords(g) for g in elements + [f]])
        assert member(f, subspace).is_member == (grown == subspace.dimension)

    @given(f2_slots(max_slots=5), st.data())
    @settings(max_examples=300, deadline=None)
    def test_rank_ignores_order(self, elements: List[RatFunc], data: st.DataObject) -> None:
        shuffled = data.draw(st.permutations(elements))
        assert rank([frob_coords(f) for f in shuffled]) == rank([frob_coords(f) for f in elements])
        n = elements[0].n
        a, b = span_of_elements(elements, n), span_of_elements(shuffled, n)
        assert intersect(a, b).dimension == a.dimension == b.dimension


class TestSolve:
    def test_kernel_and_solve(self) -> None:
        columns = [frob_coords(f).coords for f in coords('x1', 'x1*x2^2')]
        null_vectors = kernel(columns)
        assert len(null_vectors) == 1
        assert combine(null_vectors[0], coords('x1', 'x1*x2^2')).is_zero()
        solution = solve(columns, frob_coords(f2('x1^3')).coords)
        assert solution is not None
        assert combine(solution, coords('x1', 'x1*x2^2')) == f2('x1^3')
        assert solve(columns, frob_coords(f2('x2')).coords) is None


class TestTwoIndependence:
    def test_examples(self) -> None:
        independent = two_independent(coords('x1', 'x2'))
        assert independent.independent
        assert independent.rank == 4
        assert not two_independent(coords('x1', 'x1*x2^2')).independent
        dependent = two_independent(coords('x1 + x2', 'x1', 'x2'))
        assert not dependent.independent
        assert dependent.dependence is not None
        assert combine(dependent.dependence, list(dependent.products)).is_zero()

    def test_odd_powers(self) -> None:
        assert two_independent(coords('x1', 'x2^3')).independent

    def test_errors(self) -> None:
        with pytest.raises(ZeroEntryError):
            two_independent(coords('x1', '0'))
        with pytest.raises(ArityError):
            two_independent([])

    @given(f2_slots(min_slots=2), st.data())
    @settings(max_examples=300, deadline=None)
    def test_square_multiple_of_another_slot_is_dependent(
            self, alphas: List[RatFunc], data: st.DataObject) -> None:
        i, j = data.draw(st.permutations(range(len(alphas))))[:2]
        g = data.draw(rat_funcs(n=alphas[0].n, domain=F2, nonzero=True))
        alphas = list(alphas)
        alphas[i] = g * g * alphas[j]
        result = two_independent(alphas)
        assert not result.independent
        assert result.dependence is not None
        assert combine(result.dependence, list(result.products)).is_zero()
