"""
Sparse multivariate polynomials over a ScalarDomain, with exact division and a gcd based on
content/primitive-part reduction plus subresultant polynomial remainder sequences.

Terms are kept in a dict from exponent tuples to nonzero scalars. The canonical term order is
graded-lexicographic with x1 > x2 > ... > xn; it fixes the leading term, the display and the
hash.
"""

from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from pfister_check.errors import (
    DomainMismatchError,
    NotExactlyDivisibleError,
    ZeroDivisionInFieldError,
)
from pfister_check.scalar_domain import Scalar, ScalarDomain


Exponent = Tuple[int, ...]


def grlex_key(exponent: Exponent) -> Tuple[int, Exponent]:
    return (sum(exponent), exponent)


class MultiPoly:
    __slots__ = ('n', 'domain', 'terms', '_hash')

    n: int
    domain: ScalarDomain
    terms: Dict[Exponent, Scalar]

    def __init__(
            self,
            n: int,
            domain: ScalarDomain,
            terms: Optional[Mapping[Exponent, Scalar]] = None) -> None:
        self.n = n
        self.domain = domain
        self.terms = {}
        self._hash: Optional[int] = None
        if terms:
            for exponent, coefficient in terms.items():
                if len(exponent) != n:
                    raise ValueError(
                        "Exponent vector %s does not have length %d" % (exponent, n))
                if any(e < 0 for e in exponent):
                    raise ValueError("Negative exponent in %s" % (exponent,))
                if not domain.is_zero(coefficient):
                    self.terms[tuple(exponent)] = coefficient

    @staticmethod
    def zero(n: int, domain: ScalarDomain) -> 'MultiPoly':
        return MultiPoly(n, domain)

    @staticmethod
    def constant(n: int, domain: ScalarDomain, value: Scalar) -> 'MultiPoly':
        return MultiPoly(n, domain, {(0,) * n: value})

    @staticmethod
    def one(n: int, domain: ScalarDomain) -> 'MultiPoly':
        return MultiPoly.constant(n, domain, domain.one())

    @staticmethod
    def variable(index: int, n: int, domain: ScalarDomain) -> 'MultiPoly':
        """
        The variable x_{index + 1}; index is zero-based.
        """
        if not 0 <= index < n:
            raise ValueError("Variable index %d out of range for %d variables" % (index, n))
        exponent = [0] * n
        exponent[index] = 1
        return MultiPoly(n, domain, {tuple(exponent): domain.one()})

    @staticmethod
    def monomial(exponent: Exponent, domain: ScalarDomain, coefficient: Scalar) -> 'MultiPoly':
        return MultiPoly(len(exponent), domain, {exponent: coefficient})

    def _new(self, terms: Dict[Exponent, Scalar]) -> 'MultiPoly':
        # Internal fast path: terms are already free of zeros and well-formed.
        result = MultiPoly(self.n, self.domain)
        result.terms = terms
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0,) * self.n in self.terms)

    def is_one(self) -> bool:
        return self.is_constant() and self.constant_value() == self.domain.one()

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self) -> Scalar:
        return self.terms.get((0,) * self.n, self.domain.zero())

    def sorted_terms(self) -> List[Tuple[Exponent, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def leading_term(self) -> Tuple[Exponent, Scalar]:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading term")
        exponent = max(self.terms, key=grlex_key)
        return exponent, self.terms[exponent]

    def leading_coefficient(self) -> Scalar:
        return self.leading_term()[1]

    def total_degree(self) -> int:
        """
        Total degree; -1 for the zero polynomial.
        """
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((e[var] for e in self.terms), default=-1)

    def variables(self) -> List[int]:
        return [var for var in range(self.n) if any(e[var] for e in self.terms)]

    def coefficients_in(self, var: int) -> Dict[int, 'MultiPoly']:
        """
        Views the polynomial as univariate in x_{var + 1}: maps each degree to the coefficient
        polynomial, which does not involve that variable.
        """
        grouped: Dict[int, Dict[Exponent, Scalar]] = {}
        for exponent, coefficient in self.terms.items():
            reduced = exponent[:var] + (0,) + exponent[var + 1:]
            grouped.setdefault(exponent[var], {})[reduced] = coefficient
        return {degree: self._new(terms) for degree, terms in grouped.items()}

    def leading_coefficient_in(self, var: int) -> 'MultiPoly':
        coefficients = self.coefficients_in(var)
        return coefficients[max(coefficients)]

    def check_compatible(self, other: 'MultiPoly') -> None:
        if self.n != other.n or self.domain is not other.domain:
            raise DomainMismatchError(
                "Polynomials over different rings: %d variables over %s vs. %d variables "
                "over %s" % (self.n, self.domain, other.n, other.domain))

    def __add__(self, other: 'MultiPoly') -> 'MultiPoly':
        self.check_compatible(other)
        domain = self.domain
        terms = dict(self.terms)
        for exponent, coefficient in other.terms.items():
            if exponent in terms:
                total = domain.add(terms[exponent], coefficient)
                if domain.is_zero(total):
                    del terms[exponent]
                else:
                    terms[exponent] = total
            else:
                terms[exponent] = coefficient
        return self._new(terms)

    def __neg__(self) -> 'MultiPoly':
        neg = self.domain.neg
        return self._new({e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other: 'MultiPoly') -> 'MultiPoly':
        return self + (-other)

    def __mul__(self, other: 'MultiPoly') -> 'MultiPoly':
        self.check_compatible(other)
        domain = self.domain
        if not self.terms or not other.terms:
            return self._new({})
        terms: Dict[Exponent, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exponent = tuple(a + b for a, b in zip(e1, e2))
                product = domain.mul(c1, c2)
                if exponent in terms:
                    terms[exponent] = domain.add(terms[exponent], product)
                else:
                    terms[exponent] = product
        return self._new({e: c for e, c in terms.items() if not domain.is_zero(c)})

    def __pow__(self, exponent: int) -> 'MultiPoly':
        if exponent < 0:
            raise ValueError("Negative power of a polynomial: %d" % exponent)
        result = MultiPoly.one(self.n, self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> 'MultiPoly':
        domain = self.domain
        if domain.is_zero(factor):
            return self._new({})
        return self._new({e: domain.mul(c, factor) for e, c in self.terms.items()})

    def shift(self, var: int, k: int) -> 'MultiPoly':
        """
        Multiplies by x_{var + 1}^k.
        """
        return self._new({
            e[:var] + (e[var] + k,) + e[var + 1:]: c for e, c in self.terms.items()
        })

    def map_coefficients(
            self,
            target_domain: ScalarDomain,
            func: Callable[[Scalar], Scalar]) -> 'MultiPoly':
        return MultiPoly(self.n, target_domain, {e: func(c) for e, c in self.terms.items()})

    def map_exponents(self, func: Callable[[Exponent], Exponent]) -> 'MultiPoly':
        domain = self.domain
        terms: Dict[Exponent, Scalar] = {}
        for exponent, coefficient in self.terms.items():
            new_exponent = func(exponent)
            terms[new_exponent] = domain.add(terms.get(new_exponent, domain.zero()), coefficient)
        return MultiPoly(self.n, domain, terms)

    def evaluate(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.n:
            raise ValueError("Expected a point with %d coordinates, got %d" % (
                self.n, len(point)))
        domain = self.domain
        total = domain.zero()
        for exponent, coefficient in self.terms.items():
            value = coefficient
            for x, e in zip(point, exponent):
                for _ in range(e):
                    value = domain.mul(value, x)
            total = domain.add(total, value)
        return total

    def exact_div(self, divisor: 'MultiPoly') -> 'MultiPoly':
        """
        Quotient of an exact division. Dividing by the grlex leading term of the divisor leaves
        remainder zero exactly when the divisor divides self, so a leading term that is not
        divisible proves inexactness.
        """
        self.check_compatible(divisor)
        if divisor.is_zero():
            raise ZeroDivisionInFieldError("Polynomial division by zero")
        domain = self.domain
        if divisor.is_constant():
            return self.scale(domain.inv(divisor.constant_value()))
        lead_exponent, lead_coefficient = divisor.leading_term()
        lead_inverse = domain.inv(lead_coefficient)
        remainder = dict(self.terms)
        quotient: Dict[Exponent, Scalar] = {}
        while remainder:
            exponent = max(remainder, key=grlex_key)
            if any(a < b for a, b in zip(exponent, lead_exponent)):
                raise NotExactlyDivisibleError(
                    "%s is not divisible by %s" % (self, divisor))
            q_exponent = tuple(a - b for a, b in zip(exponent, lead_exponent))
            q_coefficient = domain.mul(remainder[exponent], lead_inverse)
            quotient[q_exponent] = q_coefficient
            for d_exponent, d_coefficient in divisor.terms.items():
                target = tuple(a + b for a, b in zip(q_exponent, d_exponent))
                value = domain.sub(
                    remainder.get(target, domain.zero()),
                    domain.mul(q_coefficient, d_coefficient))
                if domain.is_zero(value):
                    remainder.pop(target, None)
                else:
                    remainder[target] = value
        return self._new(quotient)

    def divides(self, other: 'MultiPoly') -> bool:
        try:
            other.exact_div(self)
        except NotExactlyDivisibleError:
            return False
        return True

    def pseudo_remainder(self, divisor: 'MultiPoly', var: int) -> 'MultiPoly':
        """
        prem(self, divisor) with respect to x_{var + 1}:
        lc(divisor)^(deg self - deg divisor + 1) * self reduced modulo divisor, computed without
        leaving the coefficient ring.
        """
        divisor_degree = divisor.degree_in(var)
        if divisor_degree < 0:
            raise ZeroDivisionInFieldError("Pseudo-division by zero")
        lead = divisor.leading_coefficient_in(var)
        remainder = self
        remaining_steps = self.degree_in(var) - divisor_degree + 1
        while not remainder.is_zero() and remainder.degree_in(var) >= divisor_degree:
            remainder_degree = remainder.degree_in(var)
            term = remainder.leading_coefficient_in(var).shift(
                var, remainder_degree - divisor_degree)
            remainder = lead * remainder - term * divisor
            remaining_steps -= 1
        if remaining_steps > 0:
            remainder = lead ** remaining_steps * remainder
        return remainder

    def normalized(self) -> 'MultiPoly':
        """
        Canonical associate: primitive with positive leading coefficient over RAT, monic over F2.
        """
        if not self.terms:
            return self
        unit = self.domain.normalizing_unit(
            self.leading_coefficient(), list(self.terms.values()))
        if unit == self.domain.one():
            return self
        return self.scale(unit)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (self.n == other.n and
                self.domain is other.domain and
                self.terms == other.terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.domain.name, tuple(self.sorted_terms())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return 'MultiPoly(%s, n=%d, %s)' % (format_poly(self), self.n, self.domain)


def format_monomial(exponent: Exponent) -> str:
    factors = []
    for index, e in enumerate(exponent):
        if e == 1:
            factors.append('x%d' % (index + 1))
        elif e > 1:
            factors.append('x%d^%d' % (index + 1, e))
    return '*'.join(factors)


def format_poly(poly: MultiPoly) -> str:
    """
    Canonical display: terms in decreasing grlex order, '^' for powers and '*' between factors,
    e.g. 'x1^2*x2 + 1'.
    """
    if poly.is_zero():
        return '0'
    domain = poly.domain
    pieces: List[str] = []
    for exponent, coefficient in poly.sorted_terms():
        monomial = format_monomial(exponent)
        coefficient_str = domain.format(coefficient)
        negative = coefficient_str.startswith('-')
        magnitude = coefficient_str[1:] if negative else coefficient_str
        if not monomial:
            body = magnitude
        elif magnitude == '1':
            body = monomial
        else:
            body = magnitude + '*' + monomial
        if not pieces:
            pieces.append('-' + body if negative else body)
        else:
            pieces.append((' - ' if negative else ' + ') + body)
    return ''.join(pieces)


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """
    Normalized greatest common divisor; gcd(0, 0) = 0 and gcd(f, 0) is f normalized.
    """
    a.check_compatible(b)
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    return _gcd_nonzero(a, b).normalized()


def poly_lcm(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_zero() or b.is_zero():
        return MultiPoly.zero(a.n, a.domain)
    return (a * b).exact_div(poly_gcd(a, b)).normalized()


def content_in(poly: MultiPoly, var: int) -> MultiPoly:
    """
    Gcd of the coefficients of poly viewed as univariate in x_{var + 1}.
    """
    result: Optional[MultiPoly] = None
    for coefficient in poly.coefficients_in(var).values():
        result = coefficient if result is None else _gcd_nonzero(result, coefficient)
        if result.is_constant():
            break
    assert result is not None, "Content of the zero polynomial"
    return result.normalized()


def primitive_part_in(poly: MultiPoly, var: int) -> MultiPoly:
    return poly.exact_div(content_in(poly, var))


def _monomial_gcd(monomial: MultiPoly, other: MultiPoly) -> MultiPoly:
    exponent = list(next(iter(monomial.terms)))
    for other_exponent in other.terms:
        exponent = [min(a, b) for a, b in zip(exponent, other_exponent)]
    return MultiPoly.monomial(tuple(exponent), monomial.domain, monomial.domain.one())


def _gcd_nonzero(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    # Both inputs are nonzero; the result is correct up to a unit.
    one = MultiPoly.one(a.n, a.domain)
    if a.is_constant() or b.is_constant():
        return one
    if a == b:
        return a
    if a.is_monomial():
        return _monomial_gcd(a, b)
    if b.is_monomial():
        return _monomial_gcd(b, a)

    a_vars = set(a.variables())
    b_vars = set(b.variables())
    var = min(a_vars | b_vars)
    if var not in a_vars:
        return _gcd_nonzero(a, content_in(b, var))
    if var not in b_vars:
        return _gcd_nonzero(content_in(a, var), b)

    a_content = content_in(a, var)
    b_content = content_in(b, var)
    content_gcd = _gcd_nonzero(a_content, b_content)
    primitive_gcd = _subresultant_gcd(
        a.exact_div(a_content), b.exact_div(b_content), var)
    return content_gcd * primitive_gcd


def _subresultant_gcd(a: MultiPoly, b: MultiPoly, var: int) -> MultiPoly:
    """
    Gcd of two polynomials that are primitive in x_{var + 1} and of positive degree in it,
    following the subresultant PRS: every division below is exact in the coefficient ring.
    """
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    one = MultiPoly.one(a.n, a.domain)
    g = one
    h = one
    while True:
        delta = a.degree_in(var) - b.degree_in(var)
        remainder = a.pseudo_remainder(b, var)
        if remainder.is_zero():
            break
        if remainder.degree_in(var) == 0:
            return one
        a, b = b, remainder.exact_div(g * h ** delta)
        g = a.leading_coefficient_in(var)
        if delta > 0:
            h = (g ** delta).exact_div(h ** (delta - 1))
    return primitive_part_in(b, var)


def gcd_of_polys(polys: Iterable[MultiPoly]) -> Optional[MultiPoly]:
    result: Optional[MultiPoly] = None
    for poly in polys:
        result = poly if result is None else poly_gcd(result, poly)
    return result
