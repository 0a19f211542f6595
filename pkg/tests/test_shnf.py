import random

import pytest
from hypothesis import given, settings, strategies as st

from curve25519_shnf import shnf
from curve25519_shnf.polyterm import TermError, evalp
from curve25519_shnf.randgen import random_form
from curve25519_shnf.sexpr import parse, render
from curve25519_shnf.shnf import (add, evalh, is_normal, mul, neg, norm, pop,
                                  pow, power)

GOLDEN = parse("(POW 3 (POW 1 (POP 1 (POW 2 4 0)) 3) (POP 1 (POW 4 2 5)))")
X = parse("(POW 1 1 0)")


@st.composite
def forms(draw, width=6, depth=5):
    """Normal forms over ``width`` variables, built with pop/pow."""
    if width == 0 or depth == 0 or draw(st.booleans()):
        return draw(st.integers(-10**6, 10**6))
    if width > 1 and draw(st.booleans()):
        i = draw(st.integers(1, min(4, width - 1)))
        return pop(i, draw(forms(width - i, depth - 1)))
    return pow(draw(st.integers(1, 4)), draw(forms(width, depth - 1)),
               draw(forms(width - 1, depth - 1)))


values = st.lists(st.integers(-20, 20), min_size=6, max_size=8)


def test_is_normal_examples():
    assert is_normal(5)
    assert is_normal(GOLDEN)
    assert not is_normal(parse("(POP 0 (POW 1 1 0))"))
    assert not is_normal(parse("(POP 2 7)"))
    assert not is_normal(parse("(POP 2 (POP 1 (POW 1 1 0)))"))
    assert not is_normal(parse("(POW 2 (POW 3 1 0) 4)"))
    assert not is_normal(parse("(POW 0 1 0)"))
    assert not is_normal(parse("(POW 1 1 (POP 0 (POW 1 1 0)))"))


def test_check_form():
    assert shnf.check_form(GOLDEN) is GOLDEN
    with pytest.raises(ValueError):
        shnf.check_form(parse("(POP X 1)"))
    with pytest.raises(ValueError):
        shnf.check_form(parse("(POW 1 1)"))


def test_evalh_examples():
    # the form is 4x^4y^2 + 3x^3 + 2z^4 + 5, which is 186 at (1 2 3)
    assert evalh(GOLDEN, (1, 2, 3)) == 4 * 4 + 3 + 2 * 81 + 5 == 186
    assert evalh(-9, (1, 2)) == -9
    assert evalh(parse("(POW 2 1 0)"), ()) == 0
    assert evalh(parse("(POP 5 (POW 1 1 7))"), (1, 2)) == 0


def test_pop_cases():
    h = parse("(POW 1 1 0)")
    assert pop(0, h) is h
    assert pop(3, 7) == 7
    assert pop(2, ("POP", 3, h)) == ("POP", 5, h)
    assert pop(1, h) == ("POP", 1, h)


def test_pow_cases():
    q = parse("(POP 1 (POW 1 2 0))")
    r = parse("(POP 2 (POW 1 1 0))")
    assert pow(2, 0, q) == pop(1, q)
    assert pow(2, ("POW", 3, r, 0), q) == ("POW", 5, r, q)
    assert pow(1, 1, 0) == ("POW", 1, 1, 0)
    with pytest.raises(ValueError):
        pow(0, 1, 0)


def test_ring_examples():
    p, q = parse("(POW 1 1 0)"), parse("(POW 2 3 4)")
    assert add(2, 3) == 5
    assert mul(2, 3) == 6
    assert add(("POP", 2, p), ("POP", 2, q)) == pop(2, add(p, q))
    assert neg(5) == -5
    assert neg(("POP", 2, p)) == ("POP", 2, neg(p))
    assert power(GOLDEN, 0) == 1
    assert power(5, 3) == 125


def _literal_int_add(x, y):
    """Case 1 of the addition, without the shortcut for 0."""
    if isinstance(y, int):
        return x + y
    if y[0] == "POP":
        return ("POP", y[1], _literal_int_add(x, y[2]))
    return ("POW", y[1], y[2], _literal_int_add(x, y[3]))


def _literal_int_mul(x, y):
    """Case 1 of the multiplication, without the shortcuts for 0 and 1."""
    if isinstance(y, int):
        return x * y
    if y[0] == "POP":
        return pop(y[1], _literal_int_mul(x, y[2]))
    return pow(y[1], _literal_int_mul(x, y[2]), _literal_int_mul(x, y[3]))


@settings(max_examples=200)
@given(forms(), values)
def test_identity_shortcuts_match_definition(h, vals):
    assert add(0, h) == _literal_int_add(0, h) == h
    assert mul(1, h) == _literal_int_mul(1, h) == h
    assert mul(0, h) == _literal_int_mul(0, h) == 0
    assert evalh(mul(1, h), vals) == evalh(h, vals)


def test_power_of_variable():
    sq = power(X, 2)
    rng = random.Random(3)
    for _ in range(20):
        n = [rng.randint(-10**9, 10**9) for _ in range(rng.randint(1, 4))]
        assert evalh(sq, n) == n[0] ** 2
    assert is_normal(sq)


@given(forms(), forms(), values)
def test_add_homomorphism(x, y, n):
    s = add(x, y)
    assert is_normal(s)
    assert evalh(s, n) == evalh(x, n) + evalh(y, n)
    assert evalh(add(y, x), n) == evalh(s, n)


@given(forms(), forms(), values)
def test_mul_homomorphism(x, y, n):
    m = mul(x, y)
    assert is_normal(m)
    assert evalh(m, n) == evalh(x, n) * evalh(y, n)


@given(forms(), values)
def test_neg(x, n):
    assert is_normal(neg(x))
    assert evalh(neg(x), n) == -evalh(x, n)
    assert neg(neg(x)) == x


@settings(max_examples=50)
@given(forms(depth=3), st.integers(0, 4), values)
def test_power(x, k, n):
    pk = power(x, k)
    assert is_normal(pk)
    assert evalh(pk, n) == evalh(x, n) ** k


@settings(max_examples=50)
@given(forms(depth=3), forms(depth=3), forms(depth=3), values)
def test_mul_associative_in_value(x, y, z, n):
    assert evalh(mul(mul(x, y), z), n) == evalh(mul(x, mul(y, z)), n)


def test_norm_golden():
    term = parse("(+ (* 4 (* (EXPT X 4) (EXPT Y 2)))"
                 " (+ (* 3 (EXPT X 3)) (+ (* 2 (EXPT Z 4)) 5)))")
    h = norm(term, ["X", "Y", "Z"])
    assert h == GOLDEN
    assert render(h) == "(POW 3 (POW 1 (POP 1 (POW 2 4 0)) 3) (POP 1 (POW 4 2 5)))"


def test_norm_cases():
    assert norm(7, ["A"]) == 7
    assert norm("C", ["A", "B", "C"]) == pop(2, X) == ("POP", 2, X)
    assert norm(parse("(- A)"), ["A"]) == ("POW", 1, -1, 0)
    with pytest.raises(TermError):
        norm(parse("(+ A D)"), ["A", "B"])


def test_norm_soundness_random():
    from curve25519_shnf.randgen import random_term, random_varlist
    rng = random.Random(5)
    for _ in range(300):
        vs = random_varlist(rng)
        t = random_term(rng, vs)
        n = [rng.randint(-9, 9) for _ in range(len(vs) + 1)]
        h = norm(t, vs)
        assert is_normal(h)
        assert evalh(h, n) == evalp(t, dict(zip(vs, n)))


def test_random_form_width():
    rng = random.Random(9)
    for _ in range(200):
        h = random_form(rng, 3)
        assert is_normal(h)
        # only the first three values matter
        assert evalh(h, (1, 2, 3)) == evalh(h, (1, 2, 3, 4, 5))


def test_run_deep_propagates_errors():
    with pytest.raises(ZeroDivisionError):
        shnf.run_deep(lambda: 1 // 0)


def test_deep_forms():
    # a univariate polynomial of degree 5000 with all coefficients present
    def build():
        h = 0
        for _ in range(5000):
            h = add(mul(h, X), 1)
        return h
    h = shnf.run_deep(build)
    assert is_normal(h)
    assert shnf.run_deep(evalh, h, (2,)) == 2**5000 - 1
