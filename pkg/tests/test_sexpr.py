import pytest
from hypothesis import given, strategies as st

from curve25519_shnf.sexpr import (SExprSyntaxError, head, parse, render,
                                   strip_comments, suffix)


def test_parse_flat():
    assert parse("(POW 1 1 0)") == ("POW", 1, 1, 0)


def test_parse_nested_term():
    assert parse("(* X (EXPT (+ Y Z) 3))") == ("*", "X", ("EXPT", ("+", "Y", "Z"), 3))


def test_parse_negative_and_case():
    assert parse("(pop -3 x0)") == ("POP", -3, "X0")
    assert parse("-") == "-"
    assert parse("  42 ") == 42


@pytest.mark.parametrize("text", ["((", "", "   ", ")", "(A))", "(A) B", "(1X)", "(A#)"])
def test_parse_errors(text):
    with pytest.raises(SExprSyntaxError):
        parse(text)


def test_error_reports_position():
    with pytest.raises(SExprSyntaxError) as exc:
        parse("(A B))")
    assert exc.value.pos == 5


def test_render():
    assert render(("POP", 3, 5)) == "(POP 3 5)"
    assert render(-7) == "-7"
    assert render(()) == "()"
    assert render(("A", ("B", ()), "C")) == "(A (B ()) C)"


def test_render_deep_sequence():
    s = 0
    for _ in range(20000):
        s = ("POP", 1, s)
    text = render(s)
    assert text.startswith("(POP 1 (POP 1 ") and text.endswith(" 0" + ")" * 20000)
    assert render(parse(text)) == text


def test_head_suffix():
    s = ("A", "B", "C")
    assert head(s) == "A"
    assert suffix(s, 1) == ("B", "C")
    assert suffix(s, 0) == s
    assert suffix(s, 3) == ()
    with pytest.raises(ValueError):
        suffix(s, 4)
    with pytest.raises(ValueError):
        head(())
    with pytest.raises(ValueError):
        head("A")


def test_strip_comments():
    assert parse(strip_comments("; leading\n(+ X ; inline\n 1)")) == ("+", "X", 1)


symbols = st.from_regex(r"[A-Z_+*][A-Z0-9_+*-]{0,5}", fullmatch=True)
sexprs = st.recursive(st.integers() | symbols,
                      lambda inner: st.lists(inner, max_size=4).map(tuple),
                      max_leaves=30)


@given(sexprs)
def test_round_trip(s):
    assert parse(render(s)) == s
    assert render(parse(render(s))) == render(s)
