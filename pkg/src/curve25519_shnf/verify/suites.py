"""Randomized cross-checks of the symbolic kernel against integer and
finite-field arithmetic.

Every suite takes an explicit seed so a failing run replays exactly, and
reports every form it produces to a :class:`ClosureTally` so the normality
of all outputs is checked in one place.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

from .. import fp_curve, shnf
from ..curve_reduce import VARIABLES, reduce, rewrite, split
from ..fp_curve import INFINITY, P, ec_add, ec_neg, on_curve
from ..polyterm import evalp
from ..randgen import (curve_values, random_curve_values, random_form,
                       random_points, random_term, random_varlist,
                       values_to_assignment)
from ..triples import OMEGA, PI0, PI1, PI2, add_term, decode_term, neg_term

log = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    trials: int = 0
    failures: int = 0
    examples: list = field(default_factory=list)

    def record(self, ok: bool, detail=None) -> None:
        self.trials += 1
        if not ok:
            self.failures += 1
            if len(self.examples) < 5:
                self.examples.append(detail)

    def to_json(self) -> dict:
        return {"name": self.name, "trials": self.trials, "failures": self.failures}


class ClosureTally(SuiteResult):
    def __init__(self):
        super().__init__("normality-closure")

    def check(self, *forms, source: str = "") -> None:
        for f in forms:
            self.record(shnf.is_normal(f), source)


def _tally(closure):
    return closure if closure is not None else ClosureTally()


def homomorphism(seed: int, trials: int = 1000, closure=None) -> SuiteResult:
    """``add``/``mul``/``neg``/``power`` against integer arithmetic."""
    closure = _tally(closure)
    rng = random.Random(seed)
    res = SuiteResult("shnf-homomorphism")
    for _ in range(trials):
        width = rng.randint(0, 8)
        x, y = random_form(rng, width), random_form(rng, width)
        values = [rng.randint(-50, 50) for _ in range(width + rng.randint(0, 2))]
        k = rng.randint(0, 4)
        vx, vy = shnf.evalh(x, values), shnf.evalh(y, values)
        s, m, n = shnf.add(x, y), shnf.mul(x, y), shnf.neg(x)
        pw = shnf.power(x, k)
        closure.check(s, m, n, pw, source="homomorphism")
        res.record(shnf.evalh(s, values) == vx + vy, ("add", x, y, values))
        res.record(shnf.evalh(m, values) == vx * vy, ("mul", x, y, values))
        res.record(shnf.evalh(n, values) == -vx, ("neg", x, values))
        res.record(shnf.evalh(pw, values) == vx**k, ("power", x, k, values))
    return res


def norm_soundness(seed: int, trials: int = 1000, closure=None) -> SuiteResult:
    closure = _tally(closure)
    rng = random.Random(seed)
    res = SuiteResult("norm-soundness")
    for _ in range(trials):
        variables = random_varlist(rng)
        term = random_term(rng, variables)
        values = [rng.randint(-30, 30) for _ in range(len(variables) + rng.randint(0, 2))]
        h = shnf.norm(term, variables)
        closure.check(h, source="norm")
        expected = evalp(term, dict(zip(variables, values)))
        res.record(shnf.evalh(h, values) == expected, (term, variables, values))
    return res


def split_soundness(seed: int, forms: int = 50, points: int = 50,
                    closure=None) -> SuiteResult:
    """``h == h0 + yj*h1 (mod P)`` at curve points, every ``j`` and ``k <= j``."""
    closure = _tally(closure)
    rng = random.Random(seed)
    res = SuiteResult("split-soundness")
    assignments = [random_curve_values(rng) for _ in range(points)]
    for _ in range(forms):
        # a form at offset k ranges over the variables VARIABLES[k:]
        hs = [random_form(rng, len(VARIABLES) - k) for k in range(3)]
        for j in range(3):
            for k in range(j + 1):
                h = hs[k]
                h0, h1 = split(h, j, k)
                closure.check(h0, h1, source="split")
                for vals in assignments:
                    tail = vals[k:]
                    lhs = shnf.evalh(h, tail)
                    rhs = shnf.evalh(h0, tail) + vals[j] * shnf.evalh(h1, tail)
                    res.record((lhs - rhs) % P == 0, (h, j, k))
    return res


def rewrite_soundness(seed: int, forms: int = 50, points: int = 50,
                      closure=None) -> SuiteResult:
    closure = _tally(closure)
    rng = random.Random(seed)
    res = SuiteResult("rewrite-soundness")
    assignments = [random_curve_values(rng) for _ in range(points)]
    for _ in range(forms):
        h = random_form(rng)
        rewritten = [rewrite(h, j) for j in range(3)]
        closure.check(*rewritten, source="rewrite")
        for vals in assignments:
            v = shnf.evalh(h, vals)
            for j, r in enumerate(rewritten):
                res.record((shnf.evalh(r, vals) - v) % P == 0, (h, j))
    return res


def reduce_linearity(seed: int, terms: int = 50, probes: int = 5,
                     closure=None) -> SuiteResult:
    """Vanishing second difference of ``reduce(t)`` in each ``Yj`` over Z."""
    closure = _tally(closure)
    rng = random.Random(seed)
    res = SuiteResult("reduce-linearity")
    for _ in range(terms):
        term = random_term(rng, VARIABLES, depth=4, max_exponent=4)
        r = reduce(term)
        closure.check(r, source="reduce")
        for _ in range(probes):
            vals = [rng.randint(-10**6, 10**6) for _ in VARIABLES]
            a, d = rng.randint(-10**6, 10**6), rng.randint(1, 10**6)
            for j in range(3):
                f = []
                for t in (a, a + d, a + 2 * d):
                    vals[j] = t
                    f.append(shnf.evalh(r, vals))
                res.record(f[2] - 2 * f[1] + f[0] == 0, (term, j))
    return res


# Each shape builds a triple from (PI0, PI1, PI2, OMEGA) and the matching
# affine result from the points (P0, P1, P2, O).
BRIDGE_SHAPES = {
    "double": (lambda: add_term(PI0, PI0), lambda p0, p1, p2: ec_add(p0, p0)),
    "mixed": (lambda: add_term(PI0, PI1), lambda p0, p1, p2: ec_add(p0, p1)),
    "omega-right": (lambda: add_term(PI0, OMEGA),
                    lambda p0, p1, p2: ec_add(p0, fp_curve.ORIGIN)),
    "omega-left": (lambda: add_term(OMEGA, PI0),
                   lambda p0, p1, p2: ec_add(fp_curve.ORIGIN, p0)),
    "omega-double": (lambda: add_term(add_term(PI0, OMEGA), add_term(PI0, OMEGA)),
                     lambda p0, p1, p2: ec_add(ec_add(p0, fp_curve.ORIGIN),
                                               ec_add(p0, fp_curve.ORIGIN))),
    "neg-mixed": (lambda: add_term(neg_term(PI0), add_term(PI0, PI1)),
                  lambda p0, p1, p2: ec_add(ec_neg(p0), ec_add(p0, p1))),
    "nested-mixed": (lambda: add_term(PI2, add_term(PI0, PI1)),
                     lambda p0, p1, p2: ec_add(p2, ec_add(p0, p1))),
    "nested-double": (lambda: add_term(add_term(PI0, PI1), add_term(PI0, PI1)),
                      lambda p0, p1, p2: ec_add(ec_add(p0, p1), ec_add(p0, p1))),
}


def decode_bridge(seed: int, trials: int = 100, shapes=None) -> SuiteResult:
    """Decoding a term-triple sum equals the affine sum of decoded inputs."""
    rng = random.Random(seed)
    res = SuiteResult("decode-bridge")
    shapes = shapes or list(BRIDGE_SHAPES)
    for name in shapes:
        build, affine = BRIDGE_SHAPES[name]
        triple = build()
        for _ in range(trials):
            pts = random_points(rng, 3)
            env = values_to_assignment(curve_values(pts))
            expected = affine(*pts)
            if expected is INFINITY:
                continue  # outside the hypotheses; never hit by random points
            res.record(decode_term(triple, env) == expected, (name, pts))
    return res


def _degenerate_triple(rng: random.Random, mode: int):
    p, q, r = random_points(rng, 3)
    origin = fp_curve.ORIGIN
    if mode == 1:
        q = p
    elif mode == 2:
        q = ec_neg(p)
    elif mode == 3:
        p = origin
    elif mode == 4:
        r = ec_neg(ec_add(p, q))
    elif mode == 5:
        q, r = origin, p
    elif mode == 6:
        q = r = p
    elif mode == 7:
        r = INFINITY
    elif mode == 8:
        q, r = origin, origin
    return p, q, r


def group_axioms(seed: int, trials: int = 200) -> SuiteResult:
    """Closure, commutativity, associativity, identity and inverses of the
    affine law, with a share of deliberately degenerate inputs."""
    rng = random.Random(seed)
    res = SuiteResult("group-axioms")
    for t in range(trials):
        p, q, r = _degenerate_triple(rng, t % 9)
        pq = ec_add(p, q)
        res.record(on_curve(pq) and on_curve(ec_add(q, r)), ("closure", p, q, r))
        res.record(pq == ec_add(q, p), ("commutativity", p, q))
        res.record(ec_add(pq, r) == ec_add(p, ec_add(q, r)), ("associativity", p, q, r))
        res.record(ec_add(p, INFINITY) == p == ec_add(INFINITY, p), ("identity", p))
        res.record(ec_add(p, ec_neg(p)) is INFINITY, ("inverse", p))
    return res


def run_suites(seed: int, scale: float = 1.0) -> list:
    """All suites at ``scale`` times their default sizes, plus the closure tally."""
    closure = ClosureTally()
    n = lambda k: max(1, int(k * scale))
    results = []
    for k, (fn, kwargs) in enumerate([
        (homomorphism, {"trials": n(1000)}),
        (norm_soundness, {"trials": n(1000)}),
        (split_soundness, {"forms": n(50), "points": n(50)}),
        (rewrite_soundness, {"forms": n(50), "points": n(50)}),
        (reduce_linearity, {"terms": n(50)}),
    ]):
        results.append(fn(seed + k, closure=closure, **kwargs))
        log.info("suite %s: %d trials, %d failures", results[-1].name,
                 results[-1].trials, results[-1].failures)
    results.append(decode_bridge(seed + 10, trials=n(100)))
    results.append(group_axioms(seed + 11, trials=n(200)))
    results.append(closure)
    return results
