"""
Diagonal symmetric bilinear forms and bilinear Pfister forms.

Over F2(x1, ..., xn) the value b(v, v) = sum(c_i * v_i^2) of a diagonal form is an F^2-linear
combination of its entries. Hence a form is isotropic iff its entries are linearly dependent
over the squares, and its nonzero values are the nonzero elements of the F^2-span of its
entries. Both facts reduce the questions here to char2_linalg.
"""

import logging

from collections import Counter
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from pfister_check.bit_vector import all_bit_vectors, bit_weight
from pfister_check.char2_linalg import (
    Row,
    Subspace,
    frob_coords,
    intersect,
    kernel,
    member,
    solve,
    span_of_elements,
)
from pfister_check.errors import (
    ArityError,
    DomainMismatchError,
    IsotropicFormError,
    MissingUnitEntryError,
    ZeroEntryError,
)
from pfister_check.rat_func import RatFunc, eval_bilinear
from pfister_check.scalar_domain import F2, ScalarDomain


def _check_uniform(values: Sequence[RatFunc], what: str) -> None:
    if not values:
        raise ArityError("A %s needs at least one entry" % what)
    first = values[0]
    for index, value in enumerate(values):
        if value.n != first.n or value.domain is not first.domain:
            raise DomainMismatchError("Entry %d of the %s lives in a different field" % (
                index, what))
        if value.is_zero():
            raise ZeroEntryError("Entry %d of the %s is zero" % (index, what))


@dataclass(frozen=True)
class PfisterForm:
    slots: Tuple[RatFunc, ...]

    def __post_init__(self) -> None:
        _check_uniform(self.slots, 'Pfister form')

    @property
    def domain(self) -> ScalarDomain:
        return self.slots[0].domain

    @property
    def n(self) -> int:
        return self.slots[0].n

    @property
    def fold(self) -> int:
        return len(self.slots)

    def tensor(self, other: 'PfisterForm') -> 'PfisterForm':
        return PfisterForm(self.slots + other.slots)

    def __str__(self) -> str:
        return '<<%s>>' % ', '.join(str(slot) for slot in self.slots)


@dataclass(frozen=True)
class DiagonalForm:
    entries: Tuple[RatFunc, ...]

    def __post_init__(self) -> None:
        _check_uniform(self.entries, 'diagonal form')

    @property
    def domain(self) -> ScalarDomain:
        return self.entries[0].domain

    @property
    def n(self) -> int:
        return self.entries[0].n

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def entry_multiset(self) -> 'Counter[RatFunc]':
        return Counter(self.entries)

    def __str__(self) -> str:
        return '<%s>' % ', '.join(str(entry) for entry in self.entries)


def _require_binary(domain: ScalarDomain, operation: str) -> None:
    if domain is not F2:
        raise DomainMismatchError("%s is only defined over F2, got a form over %s" % (
            operation, domain))


def pfister_expand(p: PfisterForm) -> DiagonalForm:
    """
    The entry for a subset S of the slots is (-1)^|S| times the product of the slots in S,
    with subsets enumerated in BitVector order.
    """
    one = RatFunc.one(p.n, p.domain)
    entries = []
    for subset in all_bit_vectors(p.fold):
        entry = one
        for slot, bit in zip(p.slots, subset):
            if bit:
                entry = entry * slot
        entries.append(-entry if bit_weight(subset) % 2 else entry)
    return DiagonalForm(tuple(entries))


def pure_part(f: DiagonalForm) -> DiagonalForm:
    """
    Drops the leading entry 1 that corresponds to the empty subset of an expansion.
    """
    if not f.entries[0].is_one():
        raise MissingUnitEntryError(
            "The form %s does not start with the unit entry of a Pfister expansion" % f)
    if f.dimension < 2:
        raise MissingUnitEntryError("The form %s has an empty pure part" % f)
    return DiagonalForm(f.entries[1:])


@dataclass(frozen=True)
class IsotropyResult:
    isotropic: bool
    # v != 0 with b(v, v) = 0 when isotropic.
    witness: Optional[Row]
    # Rank of the Frobenius coordinate matrix of the entries.
    rank: int
    dimension: int


def is_isotropic_char2(f: DiagonalForm) -> IsotropyResult:
    _require_binary(f.domain, 'The isotropy criterion')
    columns = [frob_coords(entry).coords for entry in f.entries]
    null_vectors = kernel(columns)
    coordinate_rank = f.dimension - len(null_vectors)
    if not null_vectors:
        return IsotropyResult(False, None, coordinate_rank, f.dimension)
    witness = null_vectors[0]
    assert eval_bilinear(f.entries, witness).is_zero(), \
        "Isotropy witness for %s does not vanish" % f
    return IsotropyResult(True, witness, coordinate_rank, f.dimension)


def is_anisotropic_pfister(p: PfisterForm) -> bool:
    return not is_isotropic_char2(pfister_expand(p)).isotropic


def value_subspace(f: DiagonalForm) -> Subspace:
    _require_binary(f.domain, 'The value subspace')
    return span_of_elements(f.entries, f.n)


def pure_value_subspace(p: PfisterForm) -> Subspace:
    return value_subspace(pure_part(pfister_expand(p)))


def represent(f: DiagonalForm, beta: RatFunc) -> Optional[Row]:
    """
    Some t with sum(c_i * t_i^2) = beta, or None when beta is not a value of f (or zero).
    """
    _require_binary(f.domain, 'Representation')
    columns = [frob_coords(entry).coords for entry in f.entries]
    solution = solve(columns, frob_coords(beta).coords)
    if solution is None:
        return None
    assert eval_bilinear(f.entries, solution) == beta, \
        "Representation of %s by %s does not verify" % (beta, f)
    return solution


@dataclass(frozen=True)
class SlotResult:
    is_slot: bool
    # t with sum(c_i * t_i^2) = beta over the pure part, when is_slot.
    representation: Optional[Row]
    pure_part: DiagonalForm


def _require_anisotropic(p: PfisterForm, index: Optional[int] = None) -> DiagonalForm:
    expansion = pfister_expand(p)
    if is_isotropic_char2(expansion).isotropic:
        where = '' if index is None else ' (form %d)' % index
        raise IsotropicFormError(
            "The slot criterion needs an anisotropic Pfister form, %s%s is isotropic" % (
                p, where))
    return expansion


def has_slot(p: PfisterForm, beta: RatFunc) -> SlotResult:
    _require_binary(p.domain, 'The slot criterion')
    if beta.is_zero():
        raise ZeroEntryError("0 is never a slot")
    pure = pure_part(_require_anisotropic(p))
    membership = member(beta, value_subspace(pure))
    if not membership.is_member:
        return SlotResult(False, None, pure)
    representation = represent(pure, beta)
    assert representation is not None, "Member %s has no representation over %s" % (beta, pure)
    return SlotResult(True, representation, pure)


@dataclass(frozen=True)
class CommonSlotResult:
    subspace: Subspace
    per_form_subspaces: Tuple[Subspace, ...]
    # A nonzero common value and, per form, t with pure_part(t, t) = witness.
    witness: Optional[RatFunc]
    representations: Optional[Tuple[Row, ...]]

    @property
    def dimension(self) -> int:
        return self.subspace.dimension


def common_slot_space(forms: Sequence[PfisterForm]) -> CommonSlotResult:
    """
    Intersection of the pure value subspaces; dimension 0 means no common 1-fold factor.
    """
    if not forms:
        raise ArityError("common_slot_space needs at least one form")
    pure_parts: List[DiagonalForm] = []
    for index, p in enumerate(forms):
        _require_binary(p.domain, 'The common slot search')
        pure_parts.append(pure_part(_require_anisotropic(p, index)))
    subspaces = tuple(value_subspace(pure) for pure in pure_parts)
    common = subspaces[0]
    for subspace in subspaces[1:]:
        common = intersect(common, subspace)
    logging.debug("Common slot space of %d forms has dimension %d", len(forms), common.dimension)
    if not common.dimension:
        return CommonSlotResult(common, subspaces, None, None)
    witness = common.basis_elements()[0]
    representations = []
    for pure in pure_parts:
        representation = represent(pure, witness)
        assert representation is not None, "Common value %s not represented by %s" % (
            witness, pure)
        representations.append(representation)
    return CommonSlotResult(common, subspaces, witness, tuple(representations))
