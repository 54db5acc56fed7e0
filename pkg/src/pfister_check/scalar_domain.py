"""
Exact scalar domains: the rationals (arbitrary-precision fractions) and the two-element field.

Scalars are plain Python values (Fraction for RAT, the ints 0 and 1 for F2). The domain object
carries the tag and implements the field operations, so the polynomial layer never branches on
the domain itself.
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Dict, List, Sequence, Union

from pfister_check.errors import ZeroDivisionInFieldError
from pfister_check.helpers import gcd_of_ints, lcm_of_ints


Scalar = Union[Fraction, int]


class ScalarDomain(ABC):
    name: str
    characteristic: int

    def zero(self) -> Scalar:
        return self.from_int(0)

    def one(self) -> Scalar:
        return self.from_int(1)

    @abstractmethod
    def from_int(self, k: int) -> Scalar:
        ...

    @abstractmethod
    def add(self, a: Scalar, b: Scalar) -> Scalar:
        ...

    @abstractmethod
    def neg(self, a: Scalar) -> Scalar:
        ...

    @abstractmethod
    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        ...

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar:
        ...

    @abstractmethod
    def normalizing_unit(self, leading: Scalar, coefficients: Sequence[Scalar]) -> Scalar:
        """
        The unit u such that multiplying a polynomial with the given leading coefficient and
        coefficient list by u yields its canonical associate.
        """

    @abstractmethod
    def format(self, a: Scalar) -> str:
        ...

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.add(a, self.neg(b))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return self.name


class RationalDomain(ScalarDomain):
    name = 'RAT'
    characteristic = 0

    def from_int(self, k: int) -> Scalar:
        return Fraction(k)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return Fraction(a) + b

    def neg(self, a: Scalar) -> Scalar:
        return -Fraction(a)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return Fraction(a) * b

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionInFieldError("Division by zero in %s" % self.name)
        return 1 / Fraction(a)

    def normalizing_unit(self, leading: Scalar, coefficients: Sequence[Scalar]) -> Scalar:
        # Primitive integer coefficients, positive leading coefficient.
        fractions = [Fraction(c) for c in coefficients]
        denominator_lcm = lcm_of_ints(f.denominator for f in fractions)
        numerator_gcd = gcd_of_ints(
            f.numerator * (denominator_lcm // f.denominator) for f in fractions)
        unit = Fraction(denominator_lcm, numerator_gcd)
        return -unit if leading < 0 else unit

    def format(self, a: Scalar) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return '%d/%d' % (a.numerator, a.denominator)


class BinaryDomain(ScalarDomain):
    name = 'F2'
    characteristic = 2

    def from_int(self, k: int) -> Scalar:
        return k & 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return int(a) ^ int(b)

    def neg(self, a: Scalar) -> Scalar:
        return a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return int(a) & int(b)

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionInFieldError("Division by zero in %s" % self.name)
        return 1

    def normalizing_unit(self, leading: Scalar, coefficients: Sequence[Scalar]) -> Scalar:
        # Every nonzero polynomial over F2 is already monic.
        return 1

    def format(self, a: Scalar) -> str:
        return str(int(a))


RAT = RationalDomain()
F2 = BinaryDomain()

DOMAINS_BY_NAME: Dict[str, ScalarDomain] = {
    domain.name: domain for domain in [RAT, F2]
}


def domain_by_name(name: str) -> ScalarDomain:
    upper_name = name.upper()
    if upper_name not in DOMAINS_BY_NAME:
        raise ValueError("Unknown scalar domain: %s, expected one of %s" % (
            name, sorted(DOMAINS_BY_NAME.keys())))
    return DOMAINS_BY_NAME[upper_name]


def all_domain_names() -> List[str]:
    return sorted(DOMAINS_BY_NAME.keys())
