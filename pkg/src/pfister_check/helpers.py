import logging
import math

from typing import Any, Iterable, List


def multiline_str_to_list(multiline_str: str) -> List[str]:
    """
    >>> multiline_str_to_list('''
    ...     first line
    ...
    ...     second line
    ... ''')
    ['first line', 'second line']
    """
    lines = multiline_str.strip().split("\n")
    lines = [s.strip() for s in lines]
    return [s for s in lines if s]


def log_info_heading(*args: Any) -> None:
    logging.info("")
    logging.info("-" * 80)
    logging.info(*args)
    logging.info("-" * 80)
    logging.info("")


def two_adic_valuation_of_int(k: int) -> int:
    """
    Exponent of 2 in a nonzero integer.

    >>> two_adic_valuation_of_int(12)
    2
    >>> two_adic_valuation_of_int(-7)
    0
    >>> two_adic_valuation_of_int(1024)
    10
    """
    if k == 0:
        raise ValueError("The 2-adic valuation of 0 is infinite")
    k = abs(k)
    return (k & -k).bit_length() - 1


def gcd_of_ints(values: Iterable[int]) -> int:
    """
    >>> gcd_of_ints([12, 18, -30])
    6
    >>> gcd_of_ints([])
    0
    """
    result = 0
    for value in values:
        result = math.gcd(result, value)
    return result


def lcm_of_ints(values: Iterable[int]) -> int:
    """
    >>> lcm_of_ints([4, 6, 1])
    12
    >>> lcm_of_ints([])
    1
    """
    result = 1
    for value in values:
        result = result * value // math.gcd(result, value)
    return abs(result)


def bit_index(bits: Iterable[int]) -> int:
    """
    Integer encoded by a 0/1 sequence whose first element is the least significant bit.

    >>> bit_index((1, 0, 1))
    5
    >>> bit_index(())
    0
    """
    return sum(bit << i for i, bit in enumerate(bits))


def bits_of_index(index: int, width: int) -> List[int]:
    """
    >>> bits_of_index(6, 3)
    [0, 1, 1]
    """
    if index < 0 or index >= (1 << width):
        raise ValueError("Index %d does not fit into %d bits" % (index, width))
    return [(index >> i) & 1 for i in range(width)]
