"""
The family of 2^n n-fold Pfister forms phi_d, d in {0,1}^n, built from a sequence
alpha_1, ..., alpha_n:

    phi_0 = <<alpha_1, ..., alpha_n>>
    phi_d = <<alpha_1, ..., (alpha_l omitted), ..., alpha_n>> x <<1 + alpha^d>>   for d != 0

where l is the first position with d_l = 1 and alpha^d is the product of the alpha_i with
d_i = 1. The remaining slots keep their order and 1 + alpha^d comes last.

For n = 2 and alpha = (x1, x2) the four forms are the norm forms of the quaternion algebras
(x1, x2), (x1, x2 + 1), (x2, x1 + 1), (x2, x1*x2 + 1).
"""

from collections import OrderedDict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from pfister_check.bilinear_forms import PfisterForm, pfister_expand
from pfister_check.bit_vector import (
    BitVector,
    all_bit_vectors,
    format_bit_vector,
    minimal_index,
)
from pfister_check.dyadic import ResidueMap
from pfister_check.errors import ArityError, ZeroEntryError
from pfister_check.rat_func import RatFunc, variables_of
from pfister_check.scalar_domain import F2, RAT, ScalarDomain


Family = Dict[BitVector, PfisterForm]


@dataclass(frozen=True)
class QuaternionSymbol:
    a: RatFunc
    b: RatFunc

    def __post_init__(self) -> None:
        if self.a.is_zero() or self.b.is_zero():
            raise ZeroEntryError("Quaternion symbol (%s, %s) has a zero argument" % (
                self.a, self.b))

    def __str__(self) -> str:
        return '(%s, %s)' % (self.a, self.b)


def alpha_power(alphas: Sequence[RatFunc], d: BitVector) -> RatFunc:
    result = RatFunc.one(alphas[0].n, alphas[0].domain)
    for alpha, bit in zip(alphas, d):
        if bit:
            result = result * alpha
    return result


def family_member(alphas: Sequence[RatFunc], d: BitVector) -> PfisterForm:
    if len(d) != len(alphas):
        raise ArityError("Index %s does not match %d slots" % (format_bit_vector(d), len(alphas)))
    if not any(d):
        return PfisterForm(tuple(alphas))
    extra_slot = RatFunc.one(alphas[0].n, alphas[0].domain) + alpha_power(alphas, d)
    if extra_slot.is_zero():
        raise ZeroEntryError("1 + alpha^d vanishes for d = %s" % format_bit_vector(d))
    omitted = minimal_index(d)
    kept = [alpha for position, alpha in enumerate(alphas) if position != omitted]
    return PfisterForm(tuple(kept) + (extra_slot,))


def notation1_family(
        n: int,
        alphas: Optional[Sequence[RatFunc]] = None,
        domain: ScalarDomain = RAT) -> Family:
    """
    The 2^n forms keyed and ordered by BitVector. alphas default to (x1, ..., xn) over domain.
    """
    if n < 2:
        raise ArityError("The family needs n >= 2, got %d" % n)
    if alphas is None:
        alphas = variables_of(n, domain)
    if len(alphas) != n:
        raise ArityError("Expected %d slots, got %d" % (n, len(alphas)))
    for index, alpha in enumerate(alphas):
        if alpha.is_zero():
            raise ZeroEntryError("alpha_%d is zero" % (index + 1))
    family: Family = OrderedDict()
    for d in all_bit_vectors(n):
        family[d] = family_member(alphas, d)
    return family


def norm_form(q: QuaternionSymbol) -> PfisterForm:
    return PfisterForm((q.a, q.b))


def theorem_a_quaternions() -> List[QuaternionSymbol]:
    x1, x2 = variables_of(2, RAT)
    one = RatFunc.one(2, RAT)
    return [
        QuaternionSymbol(x1, x2),
        QuaternionSymbol(x1, x2 + one),
        QuaternionSymbol(x2, x1 + one),
        QuaternionSymbol(x2, x1 * x2 + one),
    ]


# Position in the quaternion list -> family index. This pairing follows the identification
# of the norm forms, which is not BitVector order.
THEOREM_A_PAIRING: Tuple[BitVector, ...] = ((0, 0), (0, 1), (1, 0), (1, 1))


@dataclass(frozen=True)
class IdentificationResult:
    matches: bool
    # (symbol position, family index, expansions equal as multisets)
    pairs: Tuple[Tuple[int, BitVector, bool], ...]
    reason: Optional[str]


def identify_with_family(symbols: Sequence[QuaternionSymbol]) -> IdentificationResult:
    """
    Compares the norm-form expansions of the symbols with the n = 2 family over RAT, pairing
    them by THEOREM_A_PAIRING.
    """
    family = notation1_family(2, domain=RAT)
    pairs = []
    for position, symbol in enumerate(symbols[:len(THEOREM_A_PAIRING)]):
        d = THEOREM_A_PAIRING[position]
        equal = (pfister_expand(norm_form(symbol)).entry_multiset() ==
                 pfister_expand(family[d]).entry_multiset())
        pairs.append((position, d, equal))
    reason = None
    if len(symbols) != len(THEOREM_A_PAIRING):
        reason = "expected %d symbols, got %d" % (len(THEOREM_A_PAIRING), len(symbols))
    elif not all(equal for _, _, equal in pairs):
        mismatched = [position for position, _, equal in pairs if not equal]
        reason = "norm forms of symbols %s differ from their family members" % mismatched
    return IdentificationResult(reason is None, tuple(pairs), reason)


def residue_family(family: Family) -> Family:
    """
    Slotwise residue of a family over RAT.
    """
    residue_map: Optional[ResidueMap] = None
    result: Family = OrderedDict()
    for d, form in family.items():
        if residue_map is None:
            residue_map = ResidueMap(form.n)
        result[d] = residue_map.residue_pfister(form)
    return result


def binary_family(n: int) -> Family:
    return notation1_family(n, variables_of(n, F2), F2)
