"""Polynomial terms over a variable list and their integer evaluation.

A term is an S-expression built from integer literals, variable symbols and
the operators ``(+ a b)``, ``(- a b)``, ``(- a)``, ``(* a b)`` and
``(EXPT a k)`` with ``k`` a literal natural number.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence, Union

from .sexpr import SExpr, render

Assignment = Union[Mapping[str, int], Sequence[tuple]]


class TermError(ValueError):
    """A term does not conform to the grammar; ``subterm`` is the culprit."""

    def __init__(self, message: str, subterm: SExpr):
        super().__init__(f"{message}: {render(subterm)}")
        self.subterm = subterm


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate_term(s: SExpr, variables: Iterable[str]) -> SExpr:
    """Return ``s`` unchanged if it is a term over ``variables``, else raise."""
    allowed = set(variables)
    seen: set[int] = set()
    stack = [s]
    while stack:
        t = stack.pop()
        if _is_int(t):
            continue
        if isinstance(t, str):
            if t not in allowed:
                raise TermError(f"unknown symbol {t}", t)
            continue
        if not isinstance(t, tuple) or not t:
            raise TermError("not a term", t)
        if id(t) in seen:
            continue
        seen.add(id(t))
        op, args = t[0], t[1:]
        if op == "+" or op == "*":
            if len(args) != 2:
                raise TermError(f"{op} takes two arguments", t)
        elif op == "-":
            if len(args) not in (1, 2):
                raise TermError("- takes one or two arguments", t)
        elif op == "EXPT":
            if len(args) != 2:
                raise TermError("EXPT takes two arguments", t)
            k = args[1]
            if not _is_int(k) or k < 0:
                raise TermError("EXPT exponent must be a literal natural", t)
            args = args[:1]
        else:
            raise TermError(f"unknown operator {op}", t)
        stack.extend(args)
    return s


def as_mapping(assignment: Assignment) -> dict:
    if isinstance(assignment, Mapping):
        return dict(assignment)
    return {var: val for var, val in assignment}


def evalp(term: SExpr, assignment: Assignment) -> int:
    """Evaluate ``term`` over the integers.

    Shared subterms are evaluated once, which matters for the nested
    group-law terms where the same component occurs many times.
    """
    env = as_mapping(assignment)
    memo: dict[int, int] = {}

    def ev(t):
        if isinstance(t, int):
            return t
        if isinstance(t, str):
            try:
                return env[t]
            except KeyError:
                raise TermError(f"unbound variable {t}", t) from None
        key = id(t)
        if key in memo:
            return memo[key]
        op = t[0]
        if op == "+":
            v = ev(t[1]) + ev(t[2])
        elif op == "*":
            v = ev(t[1]) * ev(t[2])
        elif op == "-":
            v = -ev(t[1]) if len(t) == 2 else ev(t[1]) - ev(t[2])
        elif op == "EXPT":
            base, v = ev(t[1]), 1
            for _ in range(t[2]):
                v *= base
        else:
            raise TermError(f"unknown operator {op}", t)
        memo[key] = v
        return v

    return ev(term)
