"""
Rational functions in canonical form: numerator and denominator coprime, denominator normalized
(primitive with positive grlex-leading coefficient over RAT, monic over F2), zero stored as 0/1.
"""

from typing import List, Optional, Sequence

from pfister_check.errors import ArityError, DomainMismatchError, ZeroDivisionInFieldError
from pfister_check.multi_poly import MultiPoly, format_poly, poly_gcd, poly_lcm
from pfister_check.scalar_domain import Scalar, ScalarDomain


class RatFunc:
    __slots__ = ('numerator', 'denominator', '_hash')

    numerator: MultiPoly
    denominator: MultiPoly

    def __init__(self, numerator: MultiPoly, denominator: Optional[MultiPoly] = None) -> None:
        if denominator is None:
            denominator = MultiPoly.one(numerator.n, numerator.domain)
        numerator.check_compatible(denominator)
        if denominator.is_zero():
            raise ZeroDivisionInFieldError("Zero denominator in %s" % format_poly(numerator))
        self._hash: Optional[int] = None
        if numerator.is_zero():
            self.numerator = numerator
            self.denominator = MultiPoly.one(numerator.n, numerator.domain)
            return
        if not denominator.is_constant():
            g = poly_gcd(numerator, denominator)
            if not g.is_one():
                numerator = numerator.exact_div(g)
                denominator = denominator.exact_div(g)
        domain = numerator.domain
        unit = domain.normalizing_unit(
            denominator.leading_coefficient(), list(denominator.terms.values()))
        self.numerator = numerator.scale(unit)
        self.denominator = denominator.scale(unit)

    @staticmethod
    def zero(n: int, domain: ScalarDomain) -> 'RatFunc':
        return RatFunc(MultiPoly.zero(n, domain))

    @staticmethod
    def one(n: int, domain: ScalarDomain) -> 'RatFunc':
        return RatFunc(MultiPoly.one(n, domain))

    @staticmethod
    def constant(n: int, domain: ScalarDomain, value: Scalar) -> 'RatFunc':
        return RatFunc(MultiPoly.constant(n, domain, value))

    @staticmethod
    def from_int(n: int, domain: ScalarDomain, k: int) -> 'RatFunc':
        return RatFunc.constant(n, domain, domain.from_int(k))

    @staticmethod
    def variable(index: int, n: int, domain: ScalarDomain) -> 'RatFunc':
        return RatFunc(MultiPoly.variable(index, n, domain))

    @property
    def n(self) -> int:
        return self.numerator.n

    @property
    def domain(self) -> ScalarDomain:
        return self.numerator.domain

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def is_one(self) -> bool:
        return self.numerator.is_one() and self.denominator.is_one()

    def is_polynomial(self) -> bool:
        return self.denominator.is_constant()

    def as_polynomial(self) -> MultiPoly:
        if not self.is_polynomial():
            raise ValueError("%s is not a polynomial" % self)
        return self.numerator.scale(self.domain.inv(self.denominator.constant_value()))

    def check_compatible(self, other: 'RatFunc') -> None:
        if self.n != other.n or self.domain is not other.domain:
            raise DomainMismatchError(
                "Rational functions over different fields: %d variables over %s vs. "
                "%d variables over %s" % (self.n, self.domain, other.n, other.domain))

    def __add__(self, other: 'RatFunc') -> 'RatFunc':
        self.check_compatible(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.denominator == other.denominator:
            return RatFunc(self.numerator + other.numerator, self.denominator)
        return RatFunc(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator)

    def __neg__(self) -> 'RatFunc':
        result = RatFunc.__new__(RatFunc)
        result.numerator = -self.numerator
        result.denominator = self.denominator
        result._hash = None
        return result

    def __sub__(self, other: 'RatFunc') -> 'RatFunc':
        return self + (-other)

    def __mul__(self, other: 'RatFunc') -> 'RatFunc':
        self.check_compatible(other)
        if self.is_zero():
            return self
        if other.is_zero():
            return other
        return RatFunc(
            self.numerator * other.numerator,
            self.denominator * other.denominator)

    def inverse(self) -> 'RatFunc':
        if self.is_zero():
            raise ZeroDivisionInFieldError("Division by the zero rational function")
        return RatFunc(self.denominator, self.numerator)

    def __truediv__(self, other: 'RatFunc') -> 'RatFunc':
        self.check_compatible(other)
        return self * other.inverse()

    def __pow__(self, exponent: int) -> 'RatFunc':
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFunc(self.numerator ** exponent, self.denominator ** exponent)

    def square(self) -> 'RatFunc':
        return self * self

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        domain = self.domain
        return domain.div(self.numerator.evaluate(point), self.denominator.evaluate(point))

    def equals_by_cross_multiplication(self, other: 'RatFunc') -> bool:
        self.check_compatible(other)
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.numerator, self.denominator))
        return self._hash

    def __str__(self) -> str:
        return format_rat_func(self)

    def __repr__(self) -> str:
        return 'RatFunc(%s, n=%d, %s)' % (format_rat_func(self), self.n, self.domain)


def _is_bare_factor(poly: MultiPoly) -> bool:
    # A single term that parses as one factor: an integer or a variable power.
    if len(poly.terms) > 1:
        return False
    text = format_poly(poly)
    return '*' not in text and '/' not in text and not text.startswith('-')


def format_rat_func(f: RatFunc) -> str:
    """
    Canonical display, parseable back by the expression parser, e.g. '(x1 + 1)/x2^2'.
    """
    numerator_str = format_poly(f.numerator)
    if f.denominator.is_one():
        return numerator_str
    if len(f.numerator.terms) > 1:
        numerator_str = '(%s)' % numerator_str
    denominator_str = format_poly(f.denominator)
    if not _is_bare_factor(f.denominator):
        denominator_str = '(%s)' % denominator_str
    return '%s/%s' % (numerator_str, denominator_str)


def arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    """
    Field operation selected by name: add, sub, mul or div.
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'div':
        return a / b
    raise ValueError("Unknown operation: %s" % op)


def eval_bilinear(entries: Sequence[RatFunc], v: Sequence[RatFunc]) -> RatFunc:
    """
    b(v, v) = sum of c_i * v_i^2 for the diagonal form with the given entries.
    """
    if len(entries) != len(v):
        raise ArityError("Form has %d entries but the vector has %d coordinates" % (
            len(entries), len(v)))
    if not entries:
        raise ArityError("Cannot evaluate an empty form")
    total = RatFunc.zero(entries[0].n, entries[0].domain)
    for entry, coordinate in zip(entries, v):
        if not coordinate.is_zero():
            total = total + entry * coordinate * coordinate
    return total


def common_denominator(values: Sequence[RatFunc]) -> MultiPoly:
    """
    Normalized lcm of the denominators.
    """
    if not values:
        raise ValueError("No values given")
    result = values[0].denominator
    for value in values[1:]:
        result = poly_lcm(result, value.denominator)
    return result.normalized()


def variables_of(n: int, domain: ScalarDomain) -> List[RatFunc]:
    return [RatFunc.variable(i, n, domain) for i in range(n)]

