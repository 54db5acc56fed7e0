"""
Brute-force isotropy search over F2, independent of the Frobenius-coordinate criterion.

Candidates are vectors whose coordinates are polynomials over F2 of total degree <= D. Since
squaring is additive in characteristic 2, sum(c_i * v_i^2) is the F2-sum of c_i * m^2 over the
monomials m in the support of v_i. So the value is F2-linear in the coefficient bits of v, and
each pair (entry, monomial) contributes one generator polynomial, stored as a bitmask over the
monomials it contains.

Small spaces are walked literally in Gray-code order. Larger ones are decided by GF(2)
elimination over the generator bitmasks, which finds a vanishing combination exactly when the
walk would.
"""

import itertools
import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from pfister_check.bilinear_forms import DiagonalForm
from pfister_check.char2_linalg import Row
from pfister_check.constants import DEFAULT_ORACLE_CEILING, LITERAL_ENUMERATION_LIMIT
from pfister_check.errors import CeilingExceededError, DomainMismatchError
from pfister_check.multi_poly import Exponent, MultiPoly, grlex_key
from pfister_check.rat_func import RatFunc, common_denominator, eval_bilinear
from pfister_check.scalar_domain import F2


METHOD_LITERAL = 'literal'
METHOD_ELIMINATION = 'elimination'


@dataclass(frozen=True)
class OracleResult:
    witness: Optional[Row]
    degree_bound: int
    # Number of candidate vectors, including 0.
    search_space_size: int
    method: str


def monomials_up_to(n: int, degree_bound: int) -> List[Exponent]:
    exponents = [
        exponent for exponent in itertools.product(range(degree_bound + 1), repeat=n)
        if sum(exponent) <= degree_bound
    ]
    return sorted(exponents, key=grlex_key)


def search_space_size(f: DiagonalForm, degree_bound: int) -> int:
    return 2 ** (len(monomials_up_to(f.n, degree_bound)) * f.dimension)


class _BitmaskEncoder:
    bit_of_exponent: Dict[Exponent, int]

    def __init__(self) -> None:
        self.bit_of_exponent = {}

    def encode(self, poly: MultiPoly) -> int:
        mask = 0
        for exponent in poly.terms:
            if exponent not in self.bit_of_exponent:
                self.bit_of_exponent[exponent] = len(self.bit_of_exponent)
            mask |= 1 << self.bit_of_exponent[exponent]
        return mask


def _walk_gray_code(generators: List[int]) -> Optional[int]:
    accumulated = 0
    for step in range(1, 1 << len(generators)):
        flipped = (step & -step).bit_length() - 1
        accumulated ^= generators[flipped]
        if accumulated == 0:
            return step ^ (step >> 1)
    return None


def _eliminate(generators: List[int]) -> Optional[int]:
    # Pivot bit -> (reduced mask, combination of generators that produced it).
    basis: Dict[int, Tuple[int, int]] = {}
    for index, generator in enumerate(generators):
        mask = generator
        combination = 1 << index
        while mask:
            pivot = mask.bit_length() - 1
            if pivot not in basis:
                basis[pivot] = (mask, combination)
                break
            basis_mask, basis_combination = basis[pivot]
            mask ^= basis_mask
            combination ^= basis_combination
        if not mask:
            return combination
    return None


def brute_isotropy_search(
        f: DiagonalForm,
        degree_bound: int,
        ceiling: int = DEFAULT_ORACLE_CEILING) -> OracleResult:
    """
    Returns a vector v with sum(c_i * v_i^2) = 0 among the candidates, or no witness. A missing
    witness does not prove anisotropy.
    """
    if f.domain is not F2:
        raise DomainMismatchError("The isotropy oracle works over F2, got %s" % f.domain)
    if degree_bound < 0:
        raise ValueError("Degree bound must be nonnegative, got %d" % degree_bound)
    n = f.n
    monomials = monomials_up_to(n, degree_bound)
    size = 2 ** (len(monomials) * f.dimension)
    if size > ceiling:
        raise CeilingExceededError(
            "Isotropy search space has 2^%d elements, above the ceiling %d" % (
                len(monomials) * f.dimension, ceiling))

    # Scaling every entry by the common denominator does not change the zero set.
    denominator = RatFunc(common_denominator(f.entries))
    entries = [(entry * denominator).as_polynomial() for entry in f.entries]

    encoder = _BitmaskEncoder()
    generators = []
    for entry in entries:
        for exponent in monomials:
            square = tuple(2 * e for e in exponent)
            generators.append(encoder.encode(entry * MultiPoly.monomial(square, F2, 1)))

    if size <= LITERAL_ENUMERATION_LIMIT:
        method = METHOD_LITERAL
        combination = _walk_gray_code(generators)
    else:
        method = METHOD_ELIMINATION
        combination = _eliminate(generators)
    logging.debug("Isotropy search over %d candidates by %s: %s", size, method,
                  'found' if combination else 'nothing')
    if combination is None:
        return OracleResult(None, degree_bound, size, method)

    witness = []
    for i in range(f.dimension):
        terms = {
            exponent: 1 for j, exponent in enumerate(monomials)
            if (combination >> (i * len(monomials) + j)) & 1
        }
        witness.append(RatFunc(MultiPoly(n, F2, terms)))
    assert eval_bilinear(f.entries, witness).is_zero(), "Oracle witness does not vanish"
    return OracleResult(tuple(witness), degree_bound, size, method)
