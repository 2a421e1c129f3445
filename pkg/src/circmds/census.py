"""Closed-form counts of square submatrices and of reduced-set sizes.

All arithmetic is on Python ints.  Every division in the formulas must be
exact; a remainder means a transcription error and raises CensusError.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Optional


class CensusError(ArithmeticError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise CensusError(f"inexact division {num} / {den}")
    return q


def total_square_submatrices(n: int) -> int:
    """Q(n) = sum over u of C(n, u)^2, which is C(2n, n) - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(comb(n, u) ** 2 for u in range(1, n + 1))


def _class_sums(n: int):
    binoms = [comb(n, u) for u in range(1, n)]
    s1 = sum(binoms)
    s2 = sum(b * b for b in binoms)
    s2g = sum(gcd(n, u) * comb(n, u) ** 2 for u in range(1, n))
    return s1, s2, s2g


def reduced_count_prime(n: int) -> int:
    if not is_prime(n):
        raise ValueError(f"{n} is not prime")
    s1, s2, _ = _class_sums(n)
    return 1 + s1 + _exact_div(s2 - n * s1, 2 * n)


def reduced_count_upper(n: int) -> int:
    if n < 2:
        raise ValueError("n must be >= 2")
    s1, _, s2g = _class_sums(n)
    return 1 + s1 + _exact_div(s2g - n * s1, 2 * n)


def reduced_count_lower(n: int) -> int:
    """Smallest integer allowed by the lower half of the sandwich bound."""
    s1, s2, _ = _class_sums(n)
    # s2 <= 2n(M - s1/2 - 1)  <=>  M >= (s2 + n*s1 + 2n) / 2n
    return -(-(s2 + n * s1 + 2 * n) // (2 * n))


def sandwich_check(n: int, constructed: int) -> bool:
    """s2/2n <= M - s1/2 - 1 <= s2g/2n, scaled by 2n to stay in integers.

    s1 = sum C(n,u), s2 = sum C(n,u)^2, s2g = sum gcd(n,u) C(n,u)^2 over
    u = 1..n-1.  The middle term subtracts s1/2: that is the rearrangement
    of the upper formula, and for prime n both sides then hold with equality.
    """
    s1, s2, s2g = _class_sums(n)
    middle = 2 * n * constructed - n * s1 - 2 * n
    return s2 <= middle <= s2g


@dataclass
class CensusReport:
    n: int
    Q: int
    exact: Optional[int]
    lower: int
    upper: int
    constructed: Optional[int] = None

    @property
    def reduced(self) -> Optional[int]:
        return self.constructed if self.constructed is not None else self.exact

    @property
    def ratio(self) -> Optional[float]:
        m = self.reduced
        return self.Q / m if m else None

    @property
    def within_bounds(self) -> bool:
        return self.constructed is None or sandwich_check(self.n, self.constructed)

    def _cells(self):
        m = self.reduced
        m_cell = str(m) if m is not None else f"{self.lower}..{self.upper}"
        r_cell = f"{self.ratio:.1f}" if m is not None else "-"
        return [str(self.n), str(self.Q), m_cell, r_cell]

    def to_csv(self) -> str:
        return ",".join(self._cells())

    def table(self) -> str:
        return "n, Q, |M|, Q/|M|\n" + ", ".join(self._cells())

    def to_dict(self) -> dict:
        return {"n": self.n, "Q": self.Q, "exact": self.exact,
                "lower": self.lower, "upper": self.upper,
                "constructed": self.constructed, "ratio": self.ratio}


def census(n: int, constructed: Optional[int] = None) -> CensusReport:
    Q = total_square_submatrices(n)
    upper = reduced_count_upper(n)
    if is_prime(n):
        exact = reduced_count_prime(n)
        lower = exact
    else:
        exact = None
        lower = reduced_count_lower(n)
    return CensusReport(n, Q, exact, lower, upper, constructed)
