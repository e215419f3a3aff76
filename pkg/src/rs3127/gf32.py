"""Arithmetic in GF(32) = GF(2^5).

Elements are plain ints in 0..31; bit i is the coefficient of x^i, and
the primitive element alpha is 2 (the polynomial x). Addition is XOR.
Multiplication uses log/antilog tables built once at import time from
PRIMITIVE_POLY, so that constant is the single source of truth for every
table derived elsewhere in the package.
"""

from __future__ import annotations

# x^5 + x^2 + 1, binary 100101. The multiplicative group order 31 is
# prime, so any degree-5 irreducible polynomial is primitive.
PRIMITIVE_POLY = 0x25

FIELD_SIZE = 32
GROUP_ORDER = FIELD_SIZE - 1  # 31
ALPHA = 2


def _build_tables(poly: int) -> tuple[list[int], list[int]]:
    """Build antilog/log tables by repeated multiplication by alpha."""
    exp = [0] * GROUP_ORDER
    log = [-1] * FIELD_SIZE
    x = 1
    for i in range(GROUP_ORDER):
        exp[i] = x
        log[x] = i
        x <<= 1
        if x & FIELD_SIZE:
            x ^= poly
    if x != 1:
        raise ValueError(f"0x{poly:x} is not primitive over GF(2)")
    return exp, log


# EXP[i] = alpha^i for 0 <= i <= 30; LOG[a] = discrete log of nonzero a.
EXP, LOG = _build_tables(PRIMITIVE_POLY)

# Dense 32x32 product table; hot loops index MUL[a] once and reuse the row.
MUL = [[0] * FIELD_SIZE for _ in range(FIELD_SIZE)]
for _a in range(1, FIELD_SIZE):
    for _b in range(1, FIELD_SIZE):
        MUL[_a][_b] = EXP[(LOG[_a] + LOG[_b]) % GROUP_ORDER]
del _a, _b


def gf_add(a: int, b: int) -> int:
    """Field addition (and subtraction): bitwise XOR."""
    return a ^ b


def gf_mul(a: int, b: int) -> int:
    """Field product, modulo PRIMITIVE_POLY."""
    return MUL[a][b]


def gf_inv(a: int) -> int:
    """Multiplicative inverse; zero has none."""
    if a == 0:
        raise ZeroDivisionError("zero has no inverse in GF(32)")
    return EXP[(GROUP_ORDER - LOG[a]) % GROUP_ORDER]


def gf_div(a: int, b: int) -> int:
    if b == 0:
        raise ZeroDivisionError("division by zero in GF(32)")
    if a == 0:
        return 0
    return EXP[(LOG[a] - LOG[b]) % GROUP_ORDER]


def gf_pow(a: int, e: int) -> int:
    """a**e with the exponent reduced mod 31; 0**0 is defined as 1."""
    if a == 0:
        if e < 0:
            raise ZeroDivisionError("negative power of zero in GF(32)")
        return 0 if e else 1
    return EXP[(LOG[a] * e) % GROUP_ORDER]
