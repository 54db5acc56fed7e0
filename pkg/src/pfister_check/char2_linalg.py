"""
Linear algebra of F = F2(x1, ..., xn) over its subfield of squares.

Every f in F has a unique decomposition f = sum over e in {0,1}^n of c_e^2 * x^e. The square
roots c_e are the Frobenius coordinates of f. Since squaring is a field isomorphism F -> F^2,
an F^2-linear combination sum(g_i^2 * f_i) has coordinates sum(g_i * coords(f_i)), so all
elimination below runs on the coordinates with coefficients in F itself, and the coefficient
g_i reported by a combination is the square root of the actual F^2 coefficient.
"""

import logging

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from pfister_check.bit_vector import all_bit_vectors, bit_vector_index
from pfister_check.constants import MAX_TWO_INDEPENDENCE_SLOTS
from pfister_check.errors import ArityError, DomainMismatchError, ZeroEntryError
from pfister_check.multi_poly import Exponent, MultiPoly, poly_gcd
from pfister_check.rat_func import RatFunc, common_denominator
from pfister_check.scalar_domain import F2, Scalar


Row = Tuple[RatFunc, ...]


def _check_binary(f: RatFunc) -> None:
    if f.domain is not F2:
        raise DomainMismatchError(
            "Frobenius coordinates need a rational function over F2, got one over %s" %
            f.domain)


@dataclass(frozen=True)
class FrobCoords:
    n: int
    coords: Row

    def __post_init__(self) -> None:
        if len(self.coords) != 1 << self.n:
            raise ArityError("Expected %d coordinates, got %d" % (1 << self.n, len(self.coords)))

    @staticmethod
    def zero(n: int) -> 'FrobCoords':
        return FrobCoords(n, tuple(RatFunc.zero(n, F2) for _ in range(1 << n)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def __add__(self, other: 'FrobCoords') -> 'FrobCoords':
        return FrobCoords(self.n, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, root: RatFunc) -> 'FrobCoords':
        """
        Coordinates of root^2 * f.
        """
        return FrobCoords(self.n, tuple(root * c for c in self.coords))

    def reconstruct(self) -> RatFunc:
        return reconstruct(self)

    def __str__(self) -> str:
        return '(%s)' % ', '.join(str(c) for c in self.coords)


def frob_coords(f: RatFunc) -> FrobCoords:
    """
    Writes f = p*q / q^2, splits the exponents of p*q by parity, halves them and divides by q.
    """
    _check_binary(f)
    n = f.n
    product = f.numerator * f.denominator
    parts: List[Dict[Exponent, Scalar]] = [{} for _ in range(1 << n)]
    for exponent, coefficient in product.terms.items():
        parity = tuple(e & 1 for e in exponent)
        half = tuple(e >> 1 for e in exponent)
        # exponent = 2 * half + parity, so distinct terms land on distinct (parity, half).
        parts[bit_vector_index(parity)][half] = coefficient
    return FrobCoords(n, tuple(
        RatFunc(MultiPoly(n, F2, part), f.denominator) for part in parts))


def _monomial(e: Sequence[int]) -> RatFunc:
    return RatFunc(MultiPoly.monomial(tuple(e), F2, 1))


def reconstruct(coords: FrobCoords) -> RatFunc:
    """
    sum of c_e^2 * x^e.
    """
    n = coords.n
    total = RatFunc.zero(n, F2)
    for e, c in zip(all_bit_vectors(n), coords.coords):
        if not c.is_zero():
            total = total + c * c * _monomial(e)
    return total


def _remove_content(row: List[MultiPoly]) -> List[MultiPoly]:
    content: Optional[MultiPoly] = None
    for entry in row:
        if not entry.is_zero():
            content = entry if content is None else poly_gcd(content, entry)
            if content.is_constant():
                return row
    if content is None:
        return row
    return [entry.exact_div(content) for entry in row]


def _clear_denominators(row: Sequence[RatFunc]) -> List[MultiPoly]:
    nonzero = [entry for entry in row if not entry.is_zero()]
    if not nonzero:
        return [entry.numerator for entry in row]
    denominator = RatFunc(common_denominator(nonzero))
    return _remove_content([(entry * denominator).as_polynomial() for entry in row])


def _pivot_preference(poly: MultiPoly) -> Tuple[int, int]:
    return (poly.total_degree(), len(poly.terms))


def row_echelon(rows: Sequence[Sequence[RatFunc]]) -> Tuple[List[List[MultiPoly]], List[int]]:
    """
    Fraction-free forward elimination. Rows are cleared of denominators first; each update
    row_i := (p / g) * row_i - (a / g) * pivot_row with g = gcd(p, a) is followed by dividing
    out the content of the row, which keeps entry degrees from growing across pivot steps.
    Returns the nonzero echelon rows and their pivot columns.
    """
    work = [_clear_denominators(row) for row in rows]
    work = [row for row in work if any(not entry.is_zero() for entry in row)]
    if not work:
        return [], []
    n_cols = len(work[0])
    pivots: List[int] = []
    rank = 0
    for col in range(n_cols):
        candidates = [i for i in range(rank, len(work)) if not work[i][col].is_zero()]
        if not candidates:
            continue
        best = min(candidates, key=lambda i: _pivot_preference(work[i][col]))
        work[rank], work[best] = work[best], work[rank]
        pivot_row = work[rank]
        pivot = pivot_row[col]
        for i in range(rank + 1, len(work)):
            entry = work[i][col]
            if entry.is_zero():
                continue
            g = poly_gcd(pivot, entry)
            pivot_multiplier = pivot.exact_div(g)
            entry_multiplier = entry.exact_div(g)
            work[i] = _remove_content([
                pivot_multiplier * x - entry_multiplier * y
                for x, y in zip(work[i], pivot_row)
            ])
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def reduced_row_echelon(rows: Sequence[Sequence[RatFunc]]) -> Tuple[List[Row], List[int]]:
    """
    Reduced row echelon form over the field: pivots equal to 1, zero above and below.
    """
    echelon, pivots = row_echelon(rows)
    reduced: List[List[RatFunc]] = []
    for row, col in zip(echelon, pivots):
        pivot = row[col]
        reduced.append([RatFunc(entry, pivot) for entry in row])
    for i in range(len(reduced) - 1, -1, -1):
        col = pivots[i]
        for k in range(i):
            factor = reduced[k][col]
            if factor.is_zero():
                continue
            reduced[k] = [a - factor * b for a, b in zip(reduced[k], reduced[i])]
    return [tuple(row) for row in reduced], pivots


def _transpose(columns: Sequence[Sequence[RatFunc]]) -> List[List[RatFunc]]:
    return [list(row) for row in zip(*columns)]


def kernel(columns: Sequence[Sequence[RatFunc]]) -> List[Row]:
    """
    Basis of the solutions lambda of sum(lambda_j * column_j) = 0, one vector per free column.
    """
    if not columns:
        return []
    sample = columns[0][0]
    zero = RatFunc.zero(sample.n, sample.domain)
    one = RatFunc.one(sample.n, sample.domain)
    reduced, pivots = reduced_row_echelon(_transpose(columns))
    pivot_set = set(pivots)
    basis: List[Row] = []
    for free_col in range(len(columns)):
        if free_col in pivot_set:
            continue
        vector = [zero] * len(columns)
        vector[free_col] = one
        for row, pivot_col in zip(reduced, pivots):
            vector[pivot_col] = -row[free_col]
        basis.append(tuple(vector))
    return basis


def solve(columns: Sequence[Sequence[RatFunc]], rhs: Sequence[RatFunc]) -> Optional[Row]:
    """
    Some lambda with sum(lambda_j * column_j) = rhs (free unknowns set to 0), or None.
    """
    if not columns:
        return () if all(entry.is_zero() for entry in rhs) else None
    augmented = _transpose(list(columns) + [rhs])
    reduced, pivots = reduced_row_echelon(augmented)
    n_unknowns = len(columns)
    if pivots and pivots[-1] == n_unknowns:
        return None
    sample = rhs[0]
    solution = [RatFunc.zero(sample.n, sample.domain)] * n_unknowns
    for row, pivot_col in zip(reduced, pivots):
        solution[pivot_col] = row[n_unknowns]
    return tuple(solution)


def combine(roots: Sequence[RatFunc], elements: Sequence[RatFunc]) -> RatFunc:
    """
    sum of roots_i^2 * elements_i, the F^2-combination named by transported coefficients.
    """
    if len(roots) != len(elements):
        raise ArityError("%d coefficients for %d elements" % (len(roots), len(elements)))
    if not elements:
        raise ArityError("Empty combination")
    total = RatFunc.zero(elements[0].n, elements[0].domain)
    for root, element in zip(roots, elements):
        if not root.is_zero():
            total = total + root * root * element
    return total


@dataclass(frozen=True)
class Subspace:
    n: int
    # Reduced row echelon basis in Frobenius coordinates.
    rows: Tuple[FrobCoords, ...]
    pivots: Tuple[int, ...]

    @staticmethod
    def zero_space(n: int) -> 'Subspace':
        return Subspace(n, (), ())

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def basis_elements(self) -> List[RatFunc]:
        return [row.reconstruct() for row in self.rows]

    def __str__(self) -> str:
        return 'span{%s}' % ', '.join(str(b) for b in self.basis_elements())


def span(vectors: Sequence[FrobCoords], n: Optional[int] = None) -> Subspace:
    if n is None:
        if not vectors:
            raise ValueError("Cannot infer the ambient n of an empty span")
        n = vectors[0].n
    if any(v.n != n for v in vectors):
        raise DomainMismatchError("Vectors with different ambient n in one span")
    reduced, pivots = reduced_row_echelon([v.coords for v in vectors])
    return Subspace(n, tuple(FrobCoords(n, row) for row in reduced), tuple(pivots))


def span_of_elements(elements: Sequence[RatFunc], n: int) -> Subspace:
    return span([frob_coords(f) for f in elements], n)


def rank(vectors: Sequence[FrobCoords]) -> int:
    return len(row_echelon([v.coords for v in vectors])[1])


@dataclass(frozen=True)
class Membership:
    is_member: bool
    # Square roots of the F^2 coefficients over the subspace basis, when is_member.
    combination: Optional[Row]


def member(f: RatFunc, subspace: Subspace) -> Membership:
    _check_binary(f)
    if f.n != subspace.n:
        raise DomainMismatchError("Element over %d variables, subspace over %d" % (
            f.n, subspace.n))
    coords = frob_coords(f)
    combination = tuple(coords.coords[col] for col in subspace.pivots)
    residual = coords
    for root, row in zip(combination, subspace.rows):
        if not root.is_zero():
            residual = residual + row.scale(-root)
    if not residual.is_zero():
        return Membership(False, None)
    if subspace.dimension:
        assert combine(combination, subspace.basis_elements()) == f, \
            "Membership combination does not reproduce %s" % f
    return Membership(True, combination)


def sum_space(a: Subspace, b: Subspace) -> Subspace:
    return span(list(a.rows) + list(b.rows), a.n)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """
    Kernel method: solutions of sum(lambda_i * a_i) - sum(mu_j * b_j) = 0 give the common
    elements sum(lambda_i * a_i).
    """
    if a.n != b.n:
        raise DomainMismatchError("Subspaces over %d and %d variables" % (a.n, b.n))
    if not a.dimension or not b.dimension:
        return Subspace.zero_space(a.n)
    columns = [row.coords for row in a.rows] + [
        tuple(-c for c in row.coords) for row in b.rows]
    common: List[FrobCoords] = []
    for solution in kernel(columns):
        element = FrobCoords.zero(a.n)
        for root, row in zip(solution[:a.dimension], a.rows):
            if not root.is_zero():
                element = element + row.scale(root)
        common.append(element)
    return span(common, a.n)


@dataclass(frozen=True)
class IndependenceResult:
    independent: bool
    rank: int
    # The subset products alpha^d in BitVector order.
    products: Tuple[RatFunc, ...]
    # lambda_d with sum(lambda_d^2 * alpha^d) = 0 when dependent.
    dependence: Optional[Row]


def subset_products(alphas: Sequence[RatFunc]) -> List[RatFunc]:
    m = len(alphas)
    sample = alphas[0]
    products = []
    for d in all_bit_vectors(m):
        product = RatFunc.one(sample.n, sample.domain)
        for alpha, bit in zip(alphas, d):
            if bit:
                product = product * alpha
        products.append(product)
    return products


def two_independent(alphas: Sequence[RatFunc]) -> IndependenceResult:
    if not alphas:
        raise ArityError("two_independent needs at least one element")
    if len(alphas) > MAX_TWO_INDEPENDENCE_SLOTS:
        raise ArityError("Too many elements for a 2-independence check: %d (at most %d)" % (
            len(alphas), MAX_TWO_INDEPENDENCE_SLOTS))
    for index, alpha in enumerate(alphas):
        _check_binary(alpha)
        if alpha.is_zero():
            raise ZeroEntryError("Element %d of the sequence is zero" % index)
    products = subset_products(alphas)
    columns = [frob_coords(p).coords for p in products]
    null_vectors = kernel(columns)
    product_rank = len(products) - len(null_vectors)
    logging.debug("Rank of %d subset products: %d", len(products), product_rank)
    if not null_vectors:
        return IndependenceResult(True, product_rank, tuple(products), None)
    dependence = null_vectors[0]
    assert combine(dependence, products).is_zero(), "Dependence witness does not vanish"
    return IndependenceResult(False, product_rank, tuple(products), dependence)
