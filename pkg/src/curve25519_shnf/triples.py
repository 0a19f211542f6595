"""Curve points encoded as integer triples and as term triples.

``(m, n, z)`` encodes the affine point ``(m/z**2, n/z**3)``.  The partial
addition below covers exactly two shapes: doubling of a triple with itself
and adding a triple whose last component is the literal ``1`` to a
different one.  The term versions build the same formulas as S-expressions.
"""

from __future__ import annotations

from typing import NamedTuple

from . import fp_curve
from .curve_reduce import VARIABLES, reduce
from .fp_curve import A, P
from .polyterm import evalp, validate_term
from .sexpr import SExpr


class ShapeError(ValueError):
    """Operands match neither the doubling nor the mixed-sum shape."""


class Triple(NamedTuple):
    m: SExpr
    n: SExpr
    z: SExpr


OMEGA = Triple(0, 0, 1)
PI0 = Triple("X0", "Y0", 1)
PI1 = Triple("X1", "Y1", 1)
PI2 = Triple("X2", "Y2", 1)
NAMED = {"OMEGA": OMEGA, "PI0": PI0, "PI1": PI1, "PI2": PI2}


# -- integers ------------------------------------------------------------------

def decode_int(t) -> fp_curve.Point:
    m, n, z = t
    if z % P == 0:
        raise ZeroDivisionError("z is divisible by P")
    zi = fp_curve.finv(z)
    zi2 = zi * zi % P
    return (m * zi2 % P, n * zi2 * zi % P)


def add_int(p, q) -> tuple:
    p, q = tuple(p), tuple(q)
    if p == q:
        m, n, z = p
        z2 = z * z
        zz = 2 * n * z
        w = 3 * m * m + 2 * A * m * z2 + z2 * z2
        mm = w * w - 4 * n * n * (A * z2 + 2 * m)
        nn = w * (4 * m * n * n - mm) - 8 * n**4
        return (mm, nn, zz)
    if p[2] == 1:
        x, y, _ = p
        m, n, z = q
        z2 = z * z
        zz = z * (z2 * x - m)
        mm = (z2 * z * y - n) ** 2 - (z2 * (A + x) + m) * (z2 * x - m) ** 2
        nn = (z2 * z * y - n) * (zz * zz * x - mm) - zz**3 * y
        return (mm, nn, zz)
    raise ShapeError("add_int needs equal triples or a first triple with z = 1")


# -- terms ---------------------------------------------------------------------

def _mul(a, b):
    return ("*", a, b)


def _sub(a, b):
    return ("-", a, b)


def _expt(a, k):
    return ("EXPT", a, k)


def _double(mu, nu, zeta) -> Triple:
    z_out = _mul(2, _mul(nu, zeta))
    w = ("+", _mul(3, _expt(mu, 2)),
         ("+", _mul(2, _mul(A, _mul(mu, _expt(zeta, 2)))), _expt(zeta, 4)))
    m_out = _sub(_expt(w, 2),
                 _mul(4, _mul(_expt(nu, 2),
                              ("+", _mul(A, _expt(zeta, 2)), _mul(2, mu)))))
    n_out = _sub(_mul(w, _sub(_mul(4, _mul(mu, _expt(nu, 2))), m_out)),
                 _mul(8, _expt(nu, 4)))
    return Triple(m_out, n_out, z_out)


def _mixed_sum(theta, phi, mu, nu, zeta) -> Triple:
    dx = _sub(_mul(_expt(zeta, 2), theta), mu)
    dy = _sub(_mul(_expt(zeta, 3), phi), nu)
    z_out = _mul(zeta, dx)
    m_out = _sub(_expt(dy, 2),
                 _mul(("+", _mul(_expt(zeta, 2), ("+", A, theta)), mu),
                      _expt(dx, 2)))
    n_out = _sub(_mul(dy, _sub(_mul(_expt(z_out, 2), theta), m_out)),
                 _mul(_expt(z_out, 3), phi))
    return Triple(m_out, n_out, z_out)


def add_term(pi, lam) -> Triple:
    pi, lam = Triple(*pi), Triple(*lam)
    if pi == lam:
        return _double(*pi)
    if pi.z == 1 and not isinstance(pi.z, bool):
        return _mixed_sum(pi.m, pi.n, *lam)
    raise ShapeError("add_term needs equal triples or a first triple with z = 1")


def neg_term(pi) -> Triple:
    pi = Triple(*pi)
    return Triple(pi.m, ("-", pi.n), pi.z)


def ec_residual(pi) -> SExpr:
    """``n**2 - (m**3 + A*(m*z)**2 + m*z**4)``; zero mod P on the curve."""
    mu, nu, zeta = pi
    return _sub(_expt(nu, 2),
                ("+", _expt(mu, 3),
                 ("+", _mul(A, _expt(_mul(mu, zeta), 2)),
                  _mul(mu, _expt(zeta, 4)))))


def is_ec_encoding(pi) -> bool:
    return reduce(ec_residual(pi)) == 0


def sim_terms(pi, pi2) -> tuple:
    """The four cross-multiplied terms compared by :func:`sim`."""
    mu, nu, zeta = pi
    mu2, nu2, zeta2 = pi2
    return (_mul(mu, _expt(zeta2, 2)), _mul(mu2, _expt(zeta, 2)),
            _mul(nu, _expt(zeta2, 3)), _mul(nu2, _expt(zeta, 3)))


def sim(pi, pi2) -> bool:
    s, s2, t, t2 = sim_terms(pi, pi2)
    return reduce(s) == reduce(s2) and reduce(t) == reduce(t2)


def evaluate(pi, assignment) -> tuple:
    return tuple(evalp(c, assignment) for c in pi)


def decode_term(pi, assignment) -> fp_curve.Point:
    return decode_int(evaluate(pi, assignment))


def validate_triple(pi) -> Triple:
    for c in pi:
        validate_term(c, VARIABLES)
    return Triple(*pi)


def curve_assignment(p0, p1, p2) -> dict:
    """Bind Y0..X2 to the coordinates of three finite points."""
    (x0, y0), (x1, y1), (x2, y2) = p0, p1, p2
    return {"Y0": y0, "Y1": y1, "Y2": y2, "X0": x0, "X1": x1, "X2": x2}
