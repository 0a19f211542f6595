"""Running every computation and suite and collecting a report."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..shnf import run_deep
from . import registry, suites

log = logging.getLogger(__name__)


@dataclass
class Report:
    seed: int
    computations: list
    suites: list

    @property
    def passed(self) -> bool:
        return (all(c.passed for c in self.computations)
                and all(s.failures == 0 for s in self.suites))

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "computations": [c.to_json() for c in self.computations],
            "suites": [s.to_json() for s in self.suites],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def run_one(comp_id: str) -> registry.ComputationResult:
    """Run a computation on a deep-stack thread."""
    return run_deep(registry.run_computation, comp_id)


def run_computations(ids=None, jobs: int = 1) -> list:
    ids = list(ids or registry.REGISTRY)
    if jobs <= 1:
        results = []
        for comp_id in ids:
            results.append(run_one(comp_id))
            log.info("%s: %s (%d ms)", comp_id,
                     "pass" if results[-1].passed else "FAIL", results[-1].ms)
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_one, ids))


def run_all(jobs: int = 1, seed: int = 0, scale: float = 1.0,
            with_suites: bool = True) -> Report:
    """All registered computations, then the randomized suites.

    Failures are recorded in the report, never raised.
    """
    comps = run_computations(jobs=jobs)
    log.info("randomized suites with seed %d", seed)
    suite_results = run_deep(suites.run_suites, seed, scale) if with_suites else []
    return Report(seed, comps, suite_results)
