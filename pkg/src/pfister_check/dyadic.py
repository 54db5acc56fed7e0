"""
The 2-adic Gauss valuation on Q(x1, ..., xn) and its residue map onto F2(x1, ..., xn).

A polynomial has the least 2-adic value of its coefficients, p/q has v(p) - v(q), and every
x_i has value 0. The residue of an element of value 0 is taken by pulling the minimal power of
2 out of numerator and denominator separately and reducing the remaining 2-integral
coefficients mod 2, so even denominators never have to be inverted.
"""

import functools

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from pfister_check.bilinear_forms import DiagonalForm, PfisterForm
from pfister_check.errors import (
    DegenerateResidueError,
    DomainMismatchError,
    NonzeroValuationError,
    ResidueValuationError,
)
from pfister_check.helpers import two_adic_valuation_of_int
from pfister_check.multi_poly import MultiPoly
from pfister_check.rat_func import RatFunc
from pfister_check.scalar_domain import F2, RAT, Scalar


@functools.total_ordering
@dataclass(frozen=True)
class GaussValue:
    # None is +infinity, the value of 0 only.
    finite: Optional[int]

    @staticmethod
    def infinity() -> 'GaussValue':
        return GaussValue(None)

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    def __add__(self, other: 'GaussValue') -> 'GaussValue':
        if self.finite is None or other.finite is None:
            return GaussValue.infinity()
        return GaussValue(self.finite + other.finite)

    def __lt__(self, other: 'GaussValue') -> bool:
        if self.finite is None:
            return False
        if other.finite is None:
            return True
        return self.finite < other.finite

    def __str__(self) -> str:
        return 'inf' if self.finite is None else str(self.finite)


def scalar_valuation(c: Scalar) -> GaussValue:
    fraction = Fraction(c)
    if fraction == 0:
        return GaussValue.infinity()
    return GaussValue(
        two_adic_valuation_of_int(fraction.numerator) -
        two_adic_valuation_of_int(fraction.denominator))


def poly_valuation(p: MultiPoly) -> GaussValue:
    if p.is_zero():
        return GaussValue.infinity()
    return min(scalar_valuation(c) for c in p.terms.values())


def _require_rational(f: RatFunc) -> None:
    if f.domain is not RAT:
        raise DomainMismatchError(
            "The Gauss valuation is defined on rational functions over RAT, not %s" % f.domain)


def gauss_v(f: RatFunc) -> GaussValue:
    _require_rational(f)
    if f.is_zero():
        return GaussValue.infinity()
    numerator_value = poly_valuation(f.numerator).finite
    denominator_value = poly_valuation(f.denominator).finite
    assert numerator_value is not None and denominator_value is not None
    return GaussValue(numerator_value - denominator_value)


def _scalar_residue(c: Scalar) -> Scalar:
    # c is 2-integral here.
    value = scalar_valuation(c).finite
    assert value is not None and value >= 0, "Coefficient %s is not 2-integral" % c
    return 1 if value == 0 else 0


def _unit_part_residue(p: MultiPoly) -> MultiPoly:
    value = poly_valuation(p).finite
    assert value is not None
    unit_part = p.scale(Fraction(2) ** -value)
    return unit_part.map_coefficients(F2, _scalar_residue)


@dataclass(frozen=True)
class ResidueMap:
    """
    Residue homomorphism from the value-0 elements of Q(x1..xn) onto F2(x1..xn), x_i to x_i.
    """
    n: int

    def residue(self, f: RatFunc) -> RatFunc:
        _require_rational(f)
        if f.n != self.n:
            raise DomainMismatchError("Residue map over %d variables applied to an element over "
                                      "%d variables" % (self.n, f.n))
        if f.is_zero():
            return RatFunc.zero(self.n, F2)
        value = gauss_v(f)
        if value.finite != 0:
            raise NonzeroValuationError(
                "Cannot take the residue of %s: its Gauss value is %s, not 0" % (f, value),
                value.finite)
        return RatFunc(_unit_part_residue(f.numerator), _unit_part_residue(f.denominator))

    def residue_form(self, f: DiagonalForm) -> DiagonalForm:
        residues = []
        for index, entry in enumerate(f.entries):
            value = gauss_v(entry)
            if value.finite != 0:
                raise ResidueValuationError(
                    "Entry %d (%s) of the form has Gauss value %s, not 0" % (index, entry, value),
                    index, value.finite)
            entry_residue = self.residue(entry)
            if entry_residue.is_zero():
                raise DegenerateResidueError(
                    "Entry %d (%s) of the form has residue 0" % (index, entry), index)
            residues.append(entry_residue)
        return DiagonalForm(tuple(residues))

    def residue_pfister(self, p: PfisterForm) -> PfisterForm:
        """
        Slotwise residue; every slot must have value 0 and a nonzero residue.
        """
        return PfisterForm(self.residue_form(DiagonalForm(p.slots)).entries)


def residue(f: RatFunc) -> RatFunc:
    return ResidueMap(f.n).residue(f)


def residue_form(f: DiagonalForm) -> DiagonalForm:
    return ResidueMap(f.n).residue_form(f)
