"""
Elements d = (d1, ..., dn) of {0, 1}^n. They are ordered by the integer d1 + 2*d2 + ... with d1
least significant, so enumeration starts at the zero vector. Every index into a family, an
expansion or a coordinate vector uses this order.
"""

from typing import List, Sequence, Tuple

from pfister_check.helpers import bit_index, bits_of_index


BitVector = Tuple[int, ...]


def zero_bit_vector(n: int) -> BitVector:
    return (0,) * n


def bit_vector_from_index(index: int, n: int) -> BitVector:
    return tuple(bits_of_index(index, n))


def bit_vector_index(d: Sequence[int]) -> int:
    if any(bit not in (0, 1) for bit in d):
        raise ValueError("Not a 0/1 vector: %s" % (tuple(d),))
    return bit_index(d)


def all_bit_vectors(n: int) -> List[BitVector]:
    return [bit_vector_from_index(index, n) for index in range(1 << n)]


def minimal_index(d: BitVector) -> int:
    """
    Zero-based position of the first nonzero bit of d.
    """
    for position, bit in enumerate(d):
        if bit:
            return position
    raise ValueError("The zero vector has no nonzero bit")


def bit_weight(d: BitVector) -> int:
    return sum(d)


def format_bit_vector(d: BitVector) -> str:
    return '(%s)' % ','.join(str(bit) for bit in d)
