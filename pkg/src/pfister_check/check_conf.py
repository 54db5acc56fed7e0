import logging

from typing import Optional

from pfister_check.constants import (
    DEFAULT_MAX_N,
    DEFAULT_ORACLE_CEILING,
    HARD_MAX_N,
    OUTPUT_FORMATS,
)
from pfister_check.errors import ArityError, CeilingExceededError


class CheckConf:
    # Largest n a check accepts. Work grows with the 2^n-dimensional coordinate space.
    max_n: int

    # Largest number of candidate vectors the isotropy oracle may enumerate.
    ceiling: int

    output_format: str

    # Where to write the certificate. None means stdout.
    out_path: Optional[str]

    def __init__(
            self,
            max_n: int = DEFAULT_MAX_N,
            ceiling: int = DEFAULT_ORACLE_CEILING,
            output_format: str = 'json',
            out_path: Optional[str] = None) -> None:
        if not 2 <= max_n <= HARD_MAX_N:
            raise ValueError("--max-n must be between 2 and %d, got %d" % (HARD_MAX_N, max_n))
        if ceiling < 1:
            raise ValueError("--ceiling must be positive, got %d" % ceiling)
        if output_format not in OUTPUT_FORMATS:
            raise ValueError("Unknown output format: %s, expected one of %s" % (
                output_format, OUTPUT_FORMATS))
        self.max_n = max_n
        self.ceiling = ceiling
        self.output_format = output_format
        self.out_path = out_path

    def check_n(self, n: int) -> None:
        if n < 2:
            raise ArityError("n must be at least 2, got %d" % n)
        if n > self.max_n:
            raise CeilingExceededError(
                "n = %d is above the configured maximum %d (see --max-n)" % (n, self.max_n))
        if n > DEFAULT_MAX_N:
            logging.warning(
                "Running with n = %d: the coordinate space has dimension 2^%d = %d and this "
                "may take a long time", n, n, 2 ** n)

    def __str__(self) -> str:
        return 'CheckConf(max_n=%d, ceiling=%d, output_format=%s, out_path=%s)' % (
            self.max_n, self.ceiling, self.output_format, self.out_path)
