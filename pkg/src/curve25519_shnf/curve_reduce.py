"""Reduction of forms over (Y0 Y1 Y2 X0 X1 X2) modulo the curve equation.

Every ``Yj**2`` is replaced by ``Xj**3 + A*Xj**2 + Xj`` so that the result is
at most linear in each ``Yj``.  Two polynomials with structurally equal
reductions agree modulo the field prime at every triple of curve points.
"""

from __future__ import annotations

import threading

from . import shnf
from .fp_curve import A
from .sexpr import SExpr
from .shnf import Form, add, mul, pop, pow

VARIABLES = ("Y0", "Y1", "Y2", "X0", "X1", "X2")

# x**3 + A*x**2 + x for the x-variable three places past the current position.
THETA = ("POP", 3, ("POW", 1, ("POW", 1, ("POW", 1, 1, A), 1), 0))

_theta_powers: list = [1, THETA]
_theta_lock = threading.Lock()


def theta_power(k: int) -> Form:
    """``THETA**k``, computed once per exponent."""
    powers = _theta_powers
    if k < len(powers):
        return powers[k]
    with _theta_lock:
        while len(powers) <= k:
            powers.append(mul(THETA, powers[-1]))
        return powers[k]


def reset_theta_powers() -> None:
    with _theta_lock:
        del _theta_powers[2:]


def split(h: Form, j: int, k: int = 0) -> tuple:
    """Split ``h`` (a form over ``VARIABLES[k:]``) into ``(h0, h1)``.

    ``h0`` is free of ``Yj`` and ``h1`` is its coefficient, with even
    powers of ``Yj`` traded for powers of ``THETA``.
    """
    if j not in (0, 1, 2):
        raise ValueError(f"split variable index must be 0, 1 or 2, not {j}")
    memo: dict = {}

    def go(h, k):
        if h.__class__ is int or j < k:
            return h, 0
        key = (id(h), k)
        r = memo.get(key)
        if r is not None:
            return r
        if len(h) == 3:
            i = h[1]
            p0, p1 = go(h[2], k + i)
            r = pop(i, p0), pop(i, p1)
        else:
            i = h[1]
            p0, p1 = go(h[2], k)
            q0, q1 = go(h[3], k + 1)
            if j > k:
                r = pow(i, p0, q0), pow(i, p1, q1)
            elif i % 2 == 0:
                t = theta_power(i // 2)
                r = add(mul(t, p0), pop(1, q0)), add(mul(t, p1), pop(1, q1))
            else:
                r = (add(mul(theta_power((i + 1) // 2), p1), pop(1, q0)),
                     add(mul(theta_power((i - 1) // 2), p0), pop(1, q1)))
        memo[key] = r
        return r

    return go(h, k)


def y_form(j: int) -> Form:
    """The form of the bare variable ``Yj`` over ``VARIABLES``."""
    return pop(j, shnf.UNIT)


def rewrite(h: Form, j: int) -> Form:
    h0, h1 = split(h, j, 0)
    return add(h0, mul(h1, y_form(j)))


def reduce_form(h: Form) -> Form:
    return rewrite(rewrite(rewrite(h, 0), 1), 2)


def reduce(term: SExpr) -> Form:
    """Normalize ``term`` over ``VARIABLES`` then rewrite in Y0, Y1, Y2."""
    return reduce_form(shnf.norm(term, VARIABLES))
