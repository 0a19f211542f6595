import random

import pytest

from curve25519_shnf import shnf
from curve25519_shnf.curve_reduce import (THETA, VARIABLES, reduce, rewrite,
                                          split, theta_power, y_form)
from curve25519_shnf.fp_curve import A, P
from curve25519_shnf.randgen import random_curve_values, random_form
from curve25519_shnf.sexpr import parse
from curve25519_shnf.shnf import evalh, is_normal, norm

SEED = 77


@pytest.fixture
def rng():
    return random.Random(SEED)


def cubic(x):
    return x**3 + A * x**2 + x


def test_theta_lemma(rng):
    assert is_normal(THETA)
    for _ in range(20):
        n = [rng.randint(-10**20, 10**20) for _ in range(6)]
        for j in range(3):
            assert evalh(THETA, n[j:]) == cubic(n[3 + j])


def test_theta_powers(rng):
    assert theta_power(0) == 1
    assert theta_power(1) == THETA
    assert theta_power(3) is theta_power(3)
    for _ in range(20):
        n = [rng.randint(-10**9, 10**9) for _ in range(6)]
        for j in range(3):
            assert evalh(theta_power(2), n[j:]) == cubic(n[3 + j]) ** 2


def test_split_examples():
    h = parse("(POP 4 (POW 2 7 1))")
    assert split(5, 1, 0) == (5, 0)
    assert split(h, 0, 1) == (h, 0)
    assert split(("POW", 1, 1, 0), 0, 0) == (0, 1)
    with pytest.raises(ValueError):
        split(h, 3, 0)


def test_split_bare_variable_at_curve_points(rng):
    h0, h1 = split(("POW", 1, 1, 0), 0, 0)
    for _ in range(20):
        n = random_curve_values(rng)
        assert (evalh(h0, n) + n[0] * evalh(h1, n) - n[0]) % P == 0


def test_rewrite_examples(rng):
    y0 = norm("Y0", VARIABLES)
    assert rewrite(17, 1) == 17
    assert rewrite(y0, 0) == y0 == y_form(0)
    r = rewrite(norm(parse("(EXPT Y0 2)"), VARIABLES), 0)
    assert is_normal(r)
    for _ in range(20):
        n = [rng.randint(-10**9, 10**9) for _ in range(6)]
        base = evalh(r, n)
        assert base == cubic(n[3])
        n[0] += rng.randint(1, 100)
        assert evalh(r, n) == base


def test_rewrite_at_curve_points(rng):
    for _ in range(20):
        h = random_form(rng)
        for j in range(3):
            r = rewrite(h, j)
            assert is_normal(r)
            for _ in range(5):
                n = random_curve_values(rng)
                assert (evalh(r, n) - evalh(h, n)) % P == 0


def test_reduce_examples():
    assert reduce(42) == 42
    assert reduce(parse("(- (EXPT Y1 2) (+ (EXPT X1 3) (+ (* 486662 (EXPT X1 2)) X1)))")) == 0
    t = parse("(* (EXPT Y0 3) (EXPT Y2 4))")
    assert reduce(t) == reduce(t)
    # Y0^3 Y2^4 -> Y0 * c(X0) * c(X2)^2 with c the curve cubic
    assert reduce(t) == reduce(parse("(* Y0 (* (+ (EXPT X0 3) (+ (* 486662 (EXPT X0 2)) X0))"
                                     " (EXPT (+ (EXPT X2 3) (+ (* 486662 (EXPT X2 2)) X2)) 2)))"))


def test_reduce_is_linear_in_each_y(rng):
    from curve25519_shnf.randgen import random_term
    for _ in range(30):
        r = reduce(random_term(rng, VARIABLES, depth=4, max_exponent=4))
        assert is_normal(r)
        n = [rng.randint(-1000, 1000) for _ in range(6)]
        for j in range(3):
            f = []
            for d in range(3):
                n[j] = 10 + 7 * d
                f.append(evalh(r, n))
            assert f[2] - 2 * f[1] + f[0] == 0


def test_re_reduction_preserves_value():
    rng = random.Random(1)
    h = reduce(parse("(* (EXPT Y0 5) (+ Y1 (EXPT Y2 3)))"))
    hh = shnf.run_deep(lambda: rewrite(rewrite(rewrite(h, 0), 1), 2))
    for _ in range(10):
        n = random_curve_values(rng)
        assert (evalh(h, n) - evalh(hh, n)) % P == 0
