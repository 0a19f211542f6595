"""Seeded generators of random forms, terms and curve-point assignments."""

from __future__ import annotations

import random

from . import fp_curve
from .curve_reduce import VARIABLES
from .shnf import Form, pop, pow

LEAF_BOUND = 10**6


def random_form(rng: random.Random, width: int = 6, depth: int = 6,
                max_index: int = 4) -> Form:
    """A normal form over ``width`` variables, built through the normalizing
    constructors.

    Forms never reach past position ``width``: a POW evaluated on an
    exhausted value list is 0 regardless of its tail, so evaluation is only
    a ring homomorphism on lists covering every variable used.
    """
    if width <= 0 or depth <= 0 or rng.random() < 0.25:
        return rng.randint(-LEAF_BOUND, LEAF_BOUND)
    if width > 1 and rng.random() < 0.3:
        i = rng.randint(1, min(max_index, width - 1))
        return pop(i, random_form(rng, width - i, depth - 1, max_index))
    return pow(rng.randint(1, max_index),
               random_form(rng, width, depth - 1, max_index),
               random_form(rng, width - 1, depth - 1, max_index))


def random_term(rng: random.Random, variables, depth: int = 4,
                max_exponent: int = 3, leaf_bound: int = 20):
    """A term over ``variables`` using every operator of the grammar."""
    variables = tuple(variables)
    if depth <= 0 or rng.random() < 0.2:
        if variables and rng.random() < 0.6:
            return rng.choice(variables)
        return rng.randint(-leaf_bound, leaf_bound)
    op = rng.choice(("+", "-", "neg", "*", "EXPT"))
    sub = lambda: random_term(rng, variables, depth - 1, max_exponent, leaf_bound)
    if op == "neg":
        return ("-", sub())
    if op == "EXPT":
        return ("EXPT", sub(), rng.randint(0, max_exponent))
    return (op, sub(), sub())


def random_varlist(rng: random.Random, max_len: int = 5) -> tuple:
    names = [f"V{k}" for k in range(8)]
    rng.shuffle(names)
    return tuple(names[: rng.randint(1, max_len)])


def random_points(rng: random.Random, count: int = 3) -> list:
    return [fp_curve.random_point(rng.getrandbits(64)) for _ in range(count)]


def curve_values(points) -> tuple:
    """``(y0, y1, y2, x0, x1, x2)`` for three finite points."""
    (x0, y0), (x1, y1), (x2, y2) = points
    return (y0, y1, y2, x0, x1, x2)


def random_curve_values(rng: random.Random) -> tuple:
    return curve_values(random_points(rng, 3))


def values_to_assignment(values) -> dict:
    return dict(zip(VARIABLES, values))
