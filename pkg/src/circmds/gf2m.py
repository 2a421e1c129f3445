"""Arithmetic in GF(2^m), 1 <= m <= 16.

Elements are represented by their polynomial bit patterns: bit i holds the
coefficient of x^i.  A :class:`FieldSpec` owns the reduction polynomial and a
pair of exp/log tables that are checked against plain shift-and-xor
multiplication when the field is built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

MAX_DEGREE = 16


class FieldError(ValueError):
    """Domain error for field construction and arithmetic."""


def poly_degree(p: int) -> int:
    return p.bit_length() - 1


def poly_mod(a: int, m: int) -> int:
    """Remainder of ``a`` divided by ``m`` as polynomials over GF(2)."""
    dm = poly_degree(m)
    while a and poly_degree(a) >= dm:
        a ^= m << (poly_degree(a) - dm)
    return a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(poly) // 2."""
    deg = poly_degree(poly)
    if deg < 1:
        return False
    for d in range(2, 1 << (deg // 2 + 1)):
        if poly_mod(poly, d) == 0:
            return False
    return True


def shift_xor_mul(a: int, b: int, reduction: int, degree: int) -> int:
    """Russian-peasant product of ``a`` and ``b`` modulo ``reduction``.

    This is the reference multiplication; the table-driven path in
    :class:`FieldSpec` is validated against it.
    """
    top = 1 << degree
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= reduction
    return result


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^degree) with an explicit irreducible reduction polynomial.

    >>> F = FieldSpec(8, 0x11B)
    >>> hex(F.mul(0x53, 0xCA))
    '0x1'
    """

    degree: int
    reduction: int
    _exp: tuple = field(init=False, repr=False, compare=False)
    _log: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m, poly = self.degree, self.reduction
        if not 1 <= m <= MAX_DEGREE:
            raise FieldError(f"degree must be in [1, {MAX_DEGREE}], got {m}")
        if not (poly >> m) & 1 or poly >= 1 << (m + 1):
            raise FieldError(
                f"reduction 0x{poly:X} is not a degree-{m} polynomial")
        if not is_irreducible(poly):
            raise FieldError(f"reduction 0x{poly:X} is reducible over GF(2)")
        exp, log = self._build_tables()
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        self._validate_tables()

    @property
    def size(self) -> int:
        return 1 << self.degree

    @property
    def group_order(self) -> int:
        return (1 << self.degree) - 1

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = shift_xor_mul(r, a, self.reduction, self.degree)
            a = shift_xor_mul(a, a, self.reduction, self.degree)
            e >>= 1
        return r

    def _primitive_element(self) -> int:
        order = self.group_order
        if order == 1:
            return 1
        factors = _prime_factors(order)
        for g in range(2, self.size):
            if all(self._slow_pow(g, order // p) != 1 for p in factors):
                return g
        raise FieldError("no primitive element found")  # unreachable for a field

    def _build_tables(self):
        order = self.group_order
        g = self._primitive_element()
        # exp is doubled so mul can skip the modular reduction of the log sum
        exp = [0] * (2 * order)
        log = [0] * self.size
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = shift_xor_mul(x, g, self.reduction, self.degree)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        return tuple(exp), tuple(log)

    def _validate_tables(self):
        if self.degree <= 4:
            pairs = [(a, b) for a in range(self.size) for b in range(self.size)]
        else:
            rng = random.Random(self.reduction)
            pairs = [(rng.randrange(self.size), rng.randrange(self.size))
                     for _ in range(256)]
        for a, b in pairs:
            if self.mul(a, b) != shift_xor_mul(a, b, self.reduction, self.degree):
                raise FieldError("exp/log tables disagree with shift-and-xor")

    # raw-int arithmetic; the hot paths (determinants) use these directly

    def contains(self, v: int) -> bool:
        return 0 <= v < self.size

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no inverse")
        return self._exp[(self.group_order - self._log[a]) % self.group_order]

    def element(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.size)]

    def __str__(self):
        return f"GF(2^{self.degree})/0x{self.reduction:X}"


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: FieldSpec

    def __post_init__(self):
        if not self.field.contains(self.value):
            raise FieldError(
                f"value 0x{self.value:X} outside {self.field}")

    def _same_field(self, other: FieldElement):
        if other.field != self.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.value ^ other.value, self.field)

    __sub__ = __add__

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._same_field(other)
        return FieldElement(self.field.mul(self.value, other.value), self.field)

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"0x{self.value:02X}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


# Common fields used across the test-suite and CLI defaults.
AES_POLY = 0x11B
NIBBLE_POLY = 0x13
