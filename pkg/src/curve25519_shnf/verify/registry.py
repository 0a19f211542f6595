"""The thirteen symbolic computations behind the group axioms."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from ..curve_reduce import reduce
from ..sexpr import render
from ..triples import (OMEGA, PI0, PI1, PI2, add_term as add, ec_residual,
                       neg_term as neg, sim_terms)

EC_ENCODING = "EC-ENCODING"
SIM = "SIM"
REDUCE_EQUAL = "REDUCE-EQUAL"


class UnknownComputation(KeyError):
    pass


@dataclass(frozen=True)
class ComputationSpec:
    id: str
    description: str
    builder: Callable[[], tuple]
    checker: str
    expected: bool = True


@dataclass(frozen=True)
class ComputationResult:
    id: str
    passed: bool
    ms: int
    hash: str

    def to_json(self) -> dict:
        return {"id": self.id, "pass": self.passed, "ms": self.ms, "hash": self.hash}


def fnv1a_64(data: bytes) -> str:
    h = 0xCBF29CE484222325
    for b in data:
        h = ((h ^ b) * 0x100000001B3) & 0xFFFFFFFFFFFFFFFF
    return format(h, "016x")


def phi_psi_terms(variant: str = "shifted") -> tuple:
    """The pair of terms for the case P0 + P1 = -P0.

    ``variant="literal"`` uses the variables exactly as printed (X1, Y1, Y2,
    X2); ``"shifted"`` moves every index down by one (X0, Y0, Y1, X1),
    matching the triples they are combined with.
    """
    if variant == "literal":
        xa, ya, yb, xb = "X1", "Y1", "Y2", "X2"
    elif variant == "shifted":
        xa, ya, yb, xb = "X0", "Y0", "Y1", "X1"
    else:
        raise ValueError(f"unknown variant {variant!r}")
    mu, _, zeta = add(PI0, PI1)
    mu2, _, zeta2 = add(PI0, PI0)
    cross = ("*", 2, ("*", ya, yb))
    phi = ("-", ("EXPT", ("+", ("-", mu, ("*", xa, ("EXPT", zeta, 2))), cross), 2),
           ("EXPT", cross, 2))
    psi = ("*", ("-", mu2, ("*", xb, ("EXPT", zeta2, 2))), ("EXPT", zeta, 2))
    return phi, psi


def _assoc_sum4():
    s = add(PI0, PI1)
    return add(s, s), add(PI0, add(PI1, s))


def _assoc_dbl4():
    d = add(PI0, PI0)
    return add(d, d), add(PI0, add(PI0, d))


def _omega_dbl():
    s = add(PI0, OMEGA)
    return add(s, s), add(PI0, PI0)


COMPUTATIONS = [
    ComputationSpec("C-CLOSURE-ENC", "P0+P0 and P0+P1 are EC-encodings",
                    lambda: (add(PI0, PI0), add(PI0, PI1)), EC_ENCODING),
    ComputationSpec("C-COMM", "P0+P1 ~ P1+P0",
                    lambda: (add(PI0, PI1), add(PI1, PI0)), SIM),
    ComputationSpec("C-NEG-DBL", "-(P0+P0) ~ (-P0)+(-P0)",
                    lambda: (neg(add(PI0, PI0)), add(neg(PI0), neg(PI0))), SIM),
    ComputationSpec("C-NEG-SUM", "-(P0+P1) ~ (-P0)+(-P1)",
                    lambda: (neg(add(PI0, PI1)), add(neg(PI0), neg(PI1))), SIM),
    ComputationSpec("C-CANCEL-DBL", "(-P0)+(P0+P0) ~ P0",
                    lambda: (add(neg(PI0), add(PI0, PI0)), PI0), SIM),
    ComputationSpec("C-CANCEL-SUM", "(-P0)+(P0+P1) ~ P1",
                    lambda: (add(neg(PI0), add(PI0, PI1)), PI1), SIM),
    ComputationSpec("C-ASSOC-3", "P2+(P0+P1) ~ P1+(P0+P2)",
                    lambda: (add(PI2, add(PI0, PI1)), add(PI1, add(PI0, PI2))), SIM),
    ComputationSpec("C-ASSOC-2", "P1+(P0+P0) ~ P0+(P0+P1)",
                    lambda: (add(PI1, add(PI0, PI0)), add(PI0, add(PI0, PI1))), SIM),
    ComputationSpec("C-ASSOC-DBL4", "(P0+P0)+(P0+P0) ~ P0+(P0+(P0+P0))",
                    _assoc_dbl4, SIM),
    ComputationSpec("C-ASSOC-SUM4", "(P0+P1)+(P0+P1) ~ P0+(P1+(P0+P1))",
                    _assoc_sum4, SIM),
    ComputationSpec("C-PHI-PSI", "reduce(phi) = reduce(psi) for P0+P1 = -P0",
                    phi_psi_terms, REDUCE_EQUAL),
    ComputationSpec("C-OMEGA-DBL", "(P0+O)+(P0+O) ~ P0+P0", _omega_dbl, SIM),
    ComputationSpec("C-OMEGA-CANCEL", "O+(P0+O) ~ P0",
                    lambda: (add(OMEGA, add(PI0, OMEGA)), PI0), SIM),
]

REGISTRY = {spec.id: spec for spec in COMPUTATIONS}


def get(comp_id: str) -> ComputationSpec:
    try:
        return REGISTRY[comp_id]
    except KeyError:
        raise UnknownComputation(f"unknown computation {comp_id!r}") from None


def check(spec: ComputationSpec) -> tuple:
    """Run the checker; return ``(outcome, reduced_forms)``."""
    operands = spec.builder()
    if spec.checker == EC_ENCODING:
        forms = [reduce(ec_residual(t)) for t in operands]
        return all(f == 0 for f in forms), forms
    if spec.checker == SIM:
        forms = [reduce(t) for t in sim_terms(*operands)]
        return forms[0] == forms[1] and forms[2] == forms[3], forms
    if spec.checker == REDUCE_EQUAL:
        forms = [reduce(t) for t in operands]
        return forms[0] == forms[1], forms
    raise ValueError(f"unknown checker {spec.checker!r}")


def run_computation(comp_id: str) -> ComputationResult:
    spec = get(comp_id)
    start = time.perf_counter()
    outcome, forms = check(spec)
    ms = int((time.perf_counter() - start) * 1000)
    digest = fnv1a_64("\n".join(render(f) for f in forms).encode())
    return ComputationResult(spec.id, outcome == spec.expected, ms, digest)
