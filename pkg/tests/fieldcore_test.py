from fractions import Fraction
from typing import Tuple

import pytest

from hypothesis import assume, given, settings, strategies as st

from pfister_check.errors import (
    DomainMismatchError,
    NotExactlyDivisibleError,
    ZeroDivisionInFieldError,
)
from pfister_check.expr_parser import parse_expr
from pfister_check.multi_poly import MultiPoly, poly_gcd, poly_lcm
from pfister_check.rat_func import RatFunc, arith, common_denominator, format_rat_func
from pfister_check.scalar_domain import F2, RAT, ScalarDomain

from tests.strategies import domains, polys, rat_funcs


def rat(src: str, n: int = 2) -> RatFunc:
    return parse_expr(src, n, RAT)


def poly(src: str, n: int = 2, domain: ScalarDomain = RAT) -> MultiPoly:
    return parse_expr(src, n, domain).as_polynomial()


class TestMultiPoly:
    def test_display_in_grlex_order(self) -> None:
        assert str(poly('1 + x2 + x1*x2 + x1^2')) == 'x1^2 + x1*x2 + x2 + 1'
        assert str(poly('x1 - 1/2*x2')) == 'x1 - 1/2*x2'
        assert str(MultiPoly.zero(2, RAT)) == '0'

    def test_gcd(self) -> None:
        assert poly_gcd(poly('x1^2 - 1'), poly('x1^2 - 2*x1 + 1')) == poly('x1 - 1')
        assert poly_gcd(poly('x1^2*x2 + x1*x2'), poly('x1*x2^2')) == poly('x1*x2')
        assert poly_gcd(poly('x1 + x2'), poly('x1 - x2')).is_one()
        assert poly_gcd(poly('x1^2 + 1', domain=F2), poly('x1 + 1', domain=F2)) == \
            poly('x1 + 1', domain=F2)

    def test_gcd_is_normalized(self) -> None:
        assert poly_gcd(poly('-2*x1 - 2'), poly('0')) == poly('x1 + 1')

    def test_lcm(self) -> None:
        assert poly_lcm(poly('x1*x2'), poly('x1^2')) == poly('x1^2*x2')

    def test_exact_division(self) -> None:
        assert poly('x1^2 - x2^2').exact_div(poly('x1 + x2')) == poly('x1 - x2')
        with pytest.raises(NotExactlyDivisibleError):
            poly('x1^2 + 1').exact_div(poly('x1 + 1'))
        with pytest.raises(ZeroDivisionInFieldError):
            poly('x1').exact_div(MultiPoly.zero(2, RAT))

    def test_domain_mismatch(self) -> None:
        with pytest.raises(DomainMismatchError):
            poly('x1') + poly('x1', domain=F2)
        with pytest.raises(DomainMismatchError):
            poly('x1', n=1) * poly('x1', n=2)

    @given(polys(nonzero=True), polys(nonzero=True))
    @settings(max_examples=100, deadline=None)
    def test_gcd_divides_both(self, a: MultiPoly, b: MultiPoly) -> None:
        g = poly_gcd(a, b)
        assert g.divides(a)
        assert g.divides(b)

    @given(polys(nonzero=True), polys(nonzero=True))
    @settings(max_examples=300, deadline=None)
    def test_cofactors_of_the_gcd_are_coprime(self, a: MultiPoly, b: MultiPoly) -> None:
        g = poly_gcd(a, b)
        assert poly_gcd(a.exact_div(g), b.exact_div(g)).is_one()

    @given(domains().flatmap(lambda domain: st.tuples(
        polys(domain=domain), polys(domain=domain), polys(domain=domain))))
    @settings(max_examples=1000, deadline=None)
    def test_ring_laws(self, triple: Tuple[MultiPoly, MultiPoly, MultiPoly]) -> None:
        a, b, c = triple
        assert a + b == b + a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a - a == MultiPoly.zero(2, a.domain)

    @given(polys(domain=F2, max_degree=3, max_terms=5),
           polys(domain=F2, max_degree=3, max_terms=5))
    @settings(max_examples=300, deadline=None)
    def test_squaring_is_additive_over_f2(self, a: MultiPoly, b: MultiPoly) -> None:
        assert (a + b) ** 2 == a ** 2 + b ** 2

    @given(polys(nonzero=True), polys(nonzero=True))
    @settings(max_examples=100, deadline=None)
    def test_exact_div_undoes_mul(self, a: MultiPoly, b: MultiPoly) -> None:
        assert (a * b).exact_div(b) == a


class TestRatFunc:
    def test_canonical_form(self) -> None:
        f = rat('(2*x1 + 2)/(4*x2)')
        assert f.denominator == poly('x2')
        assert f.numerator == poly('1/2*x1 + 1/2')
        assert rat('x1/(-x2)') == rat('-x1/x2')
        assert rat('(x1^2 - 1)/(x1 - 1)') == rat('x1 + 1')
        assert rat('(x1^2 - 1)/(x1 - 1)').is_polynomial()

    def test_zero_is_zero_over_one(self) -> None:
        zero = rat('x1 - x1')
        assert zero.is_zero()
        assert zero.denominator.is_one()
        assert zero == RatFunc.zero(2, RAT)

    def test_division_by_zero(self) -> None:
        with pytest.raises(ZeroDivisionInFieldError):
            RatFunc.one(2, RAT) / RatFunc.zero(2, RAT)
        with pytest.raises(ZeroDivisionInFieldError):
            RatFunc.zero(2, F2).inverse()

    def test_f2_arithmetic(self) -> None:
        x1 = RatFunc.variable(0, 2, F2)
        one = RatFunc.one(2, F2)
        assert (x1 + one) * (x1 + one) == x1 * x1 + one
        assert -x1 == x1
        assert x1 + x1 == RatFunc.zero(2, F2)

    def test_display(self) -> None:
        assert format_rat_func(rat('(x1+1)/(x2^2)')) == '(x1 + 1)/x2^2'
        assert str(rat('x1/(2*x2 + 1)')) == 'x1/(2*x2 + 1)'
        assert str(rat('1/(x1*x2)')) == '1/(x1*x2)'
        assert str(rat('3/2')) == '3/2'

    def test_compound_denominator_is_parenthesized(self) -> None:
        assert str(rat('1/(x2 + 1)')) == '1/(x2 + 1)'
        assert str(rat('x1/(x1 - x2)')) == 'x1/(x1 - x2)'
        assert str(rat('(x1 + 1)/(x1*x2 + 1)')) == '(x1 + 1)/(x1*x2 + 1)'
        assert str(rat('1/(2*x2)')) == '1/2/x2'
        assert str(rat('x1/(-x2^2)')) == '-x1/x2^2'
        for src in ['1/(x2 + 1)', 'x1/(x1 - x2)', '1/(2*x2)', '3/(x1^2 + x2)']:
            assert parse_expr(str(rat(src)), 2, RAT) == rat(src)
        over_f2 = parse_expr('1/(x1 + x2)', 2, F2)
        assert str(over_f2) == '1/(x1 + x2)'
        assert parse_expr(str(over_f2), 2, F2) == over_f2

    def test_negative_power(self) -> None:
        assert rat('x1') ** -2 == rat('1/x1^2')
        assert rat('x1 + x2') ** 0 == RatFunc.one(2, RAT)

    def test_arith(self) -> None:
        a, b = rat('x1'), rat('x2 + 1')
        assert arith(a, b, 'add') == a + b
        assert arith(a, b, 'div') == rat('x1/(x2 + 1)')
        with pytest.raises(ValueError):
            arith(a, b, 'pow')

    def test_common_denominator(self) -> None:
        values = [rat('1/x1'), rat('x2/(x1*x2 + x1)'), rat('1/2')]
        assert common_denominator(values) == poly('x1*x2 + x1')

    @given(domains().flatmap(lambda domain: rat_funcs(domain=domain).flatmap(
        lambda a: rat_funcs(domain=domain).map(lambda b: (a, b)))))
    @settings(max_examples=200, deadline=None)
    def test_field_laws(self, pair: tuple) -> None:
        a, b = pair
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a / b) * b == a
            assert b * b.inverse() == RatFunc.one(2, b.domain)

    @given(rat_funcs(), polys(nonzero=True))
    @settings(max_examples=100, deadline=None)
    def test_canonical_form_is_unique(self, f: RatFunc, c: MultiPoly) -> None:
        expanded = RatFunc(f.numerator * c, f.denominator * c)
        assert expanded == f
        assert expanded.equals_by_cross_multiplication(f)

    @given(rat_funcs(), rat_funcs())
    @settings(max_examples=100, deadline=None)
    def test_evaluation_is_a_homomorphism(self, a: RatFunc, b: RatFunc) -> None:
        point = [Fraction(3), Fraction(-5, 7)]
        product = a * b
        assume(not a.denominator.evaluate(point) == 0)
        assume(not b.denominator.evaluate(point) == 0)
        assert product.evaluate(point) == a.evaluate(point) * b.evaluate(point)

    @given(st.integers(min_value=1, max_value=3).flatmap(
        lambda n: rat_funcs(n=n, domain=RAT, max_degree=3)))
    @settings(max_examples=500, deadline=None)
    def test_display_reparses(self, f: RatFunc) -> None:
        assert parse_expr(str(f), f.n, RAT) == f

    @given(st.integers(min_value=1, max_value=3).flatmap(
        lambda n: rat_funcs(n=n, domain=F2, max_degree=3)))
    @settings(max_examples=500, deadline=None)
    def test_display_reparses_over_f2(self, f: RatFunc) -> None:
        assert parse_expr(str(f), f.n, F2) == f
