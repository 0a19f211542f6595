"""Arithmetic in GF(2**255 - 19) and the affine group law of Curve25519.

Field elements are plain ``int`` residues in ``[0, P)``.  A finite point is a
pair ``(x, y)``; the point at infinity is ``INFINITY`` (``None``).
"""

from __future__ import annotations

import random
from typing import Optional, Tuple

P = 2**255 - 19
A = 486662

Point = Optional[Tuple[int, int]]
INFINITY: Point = None
ORIGIN = (0, 0)

_SQRT_M1 = pow(2, (P - 1) // 4, P)


class NotOnCurve(ValueError):
    pass


def fadd(a: int, b: int) -> int:
    return (a + b) % P


def fsub(a: int, b: int) -> int:
    return (a - b) % P


def fmul(a: int, b: int) -> int:
    return (a * b) % P


def fneg(a: int) -> int:
    return -a % P


def finv(a: int) -> int:
    """Inverse by Fermat: ``a**(P-2)``."""
    a %= P
    if a == 0:
        raise ZeroDivisionError("0 has no inverse mod P")
    return pow(a, P - 2, P)


def fdiv(a: int, b: int) -> int:
    return fmul(a, finv(b))


def curve_rhs(x: int) -> int:
    return (x * x * x + A * x * x + x) % P


def on_curve(pt: Point) -> bool:
    if pt is INFINITY:
        return True
    x, y = pt
    return 0 <= x < P and 0 <= y < P and y * y % P == curve_rhs(x)


def point(x: int, y: int) -> Tuple[int, int]:
    """A checked finite curve point."""
    pt = (x % P, y % P)
    if not on_curve(pt):
        raise NotOnCurve(f"({x:x}, {y:x}) is not on the curve")
    return pt


def ec_neg(pt: Point) -> Point:
    if pt is INFINITY:
        return INFINITY
    x, y = pt
    return (x, -y % P)


def ec_add(p1: Point, p2: Point) -> Point:
    if p1 is INFINITY:
        return p2
    if p2 is INFINITY:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and (y1 + y2) % P == 0:
        return INFINITY
    if x1 != x2:
        lam = fdiv(y2 - y1, x2 - x1)
    else:
        lam = fdiv(3 * x1 * x1 + 2 * A * x1 + 1, 2 * y1)
    x = (lam * lam - A - x1 - x2) % P
    y = (lam * (x1 - x) - y1) % P
    return (x, y)


def sqrt_mod(a: int) -> Optional[int]:
    """A square root of ``a`` mod P, or None for a non-residue.

    P = 5 (mod 8), so ``a**((P+3)/8)`` is a root of ``a`` or of ``-a``;
    in the latter case multiplying by sqrt(-1) fixes it.
    """
    a %= P
    r = pow(a, (P + 3) // 8, P)
    r2 = r * r % P
    if r2 == a:
        return r
    if r2 == -a % P:
        return r * _SQRT_M1 % P
    return None


def random_point(seed: int, exclude_origin: bool = False) -> Tuple[int, int]:
    """Deterministic finite curve point drawn from ``seed``."""
    rng = random.Random(seed)
    while True:
        x = rng.randrange(P)
        y = sqrt_mod(curve_rhs(x))
        if y is None or (exclude_origin and x == 0):
            continue
        if rng.getrandbits(1):
            y = -y % P
        return (x, y)


def to_hex(a: int) -> str:
    """Big-endian lowercase hex of a canonical residue."""
    return format(a % P, "x")
