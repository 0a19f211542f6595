"""Sparse Horner forms.

A form is an ``int``, ``("POP", i, p)`` (skip ``i`` variables, continue with
``p``) or ``("POW", i, p, q)`` denoting ``v0**i * p + q`` where ``q`` ranges
over the variables after ``v0``.  Forms are ordinary S-expressions, so
structural equality is tuple equality and rendering is the S-expression
renderer.

Nothing is memoized here.  Measured on the group-law computations, interning
and operation memo tables cost more in hashing than they save, and keep every
intermediate alive.
"""

from __future__ import annotations

import sys
import threading
from typing import Callable, Sequence, TypeVar, Union

from .polyterm import TermError, validate_term
from .sexpr import SExpr, render

T = TypeVar("T")
Form = Union[int, tuple]

POP = "POP"
POW = "POW"
UNIT = (POW, 1, 1, 0)


def run_deep(fn: Callable[..., T], *args, stack_mb: int = 1024,
             recursion_limit: int = 1_000_000) -> T:
    """Run ``fn(*args)`` on a thread with a large stack.

    The kernel recurses over form depth, which for the bigger group-law
    computations is far past the default recursion limit.
    """
    result: list = []
    error: list = []

    def target():
        try:
            result.append(fn(*args))
        except BaseException as exc:  # re-raised on the caller's thread
            error.append(exc)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, recursion_limit))
    old_stack = threading.stack_size(stack_mb * 1024 * 1024)
    try:
        t = threading.Thread(target=target)
        t.start()
        t.join()
    finally:
        threading.stack_size(old_stack)
        sys.setrecursionlimit(old_limit)
    if error:
        raise error[0]
    return result[0]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _is_nat(x) -> bool:
    return _is_int(x) and x >= 0


def check_form(h: SExpr) -> Form:
    """Return ``h`` if it is a well-formed (not necessarily normal) form."""
    stack = [h]
    while stack:
        x = stack.pop()
        if _is_int(x):
            continue
        if isinstance(x, tuple) and x and _is_nat(x[1] if len(x) > 1 else None):
            if x[0] == POP and len(x) == 3:
                stack.append(x[2])
                continue
            if x[0] == POW and len(x) == 4:
                stack.append(x[2])
                stack.append(x[3])
                continue
        raise ValueError(f"not a sparse Horner form: {render(x)}")
    return h


def is_normal(h: Form) -> bool:
    """True iff no POP has index 0, an integer body or a POP body, and no
    POW has exponent 0 or a body of the shape ``(POW j r 0)``."""
    seen: set[int] = set()
    stack = [h]
    while stack:
        x = stack.pop()
        if x.__class__ is int or id(x) in seen:
            continue
        seen.add(id(x))
        p = x[2]
        if len(x) == 3:
            if x[1] == 0 or p.__class__ is int or len(p) == 3:
                return False
            stack.append(p)
        else:
            if x[1] == 0 or (p.__class__ is tuple and len(p) == 4 and p[3] == 0):
                return False
            stack.append(p)
            stack.append(x[3])
    return True


def evalh(h: Form, values: Sequence[int]) -> int:
    """Value of ``h`` at the integer list ``values``."""
    values = tuple(values)
    n = len(values)
    memo: dict = {}

    def ev(x, k):
        if x.__class__ is int:
            return x
        key = (id(x), k)
        v = memo.get(key)
        if v is not None:
            return v
        if len(x) == 3:
            v = ev(x[2], min(k + x[1], n))
        elif k >= n:
            v = 0
        else:
            v = values[k] ** x[1] * ev(x[2], k) + ev(x[3], k + 1)
        memo[key] = v
        return v

    return ev(h, 0)


def node_count(h: Form) -> int:
    """Number of POP/POW nodes in ``h``, counting shared subtrees once."""
    seen: set[int] = set()
    stack = [h]
    while stack:
        x = stack.pop()
        if x.__class__ is int or id(x) in seen:
            continue
        seen.add(id(x))
        stack.extend(x[2:])
    return len(seen)


# -- normalizing constructors ------------------------------------------------

def pop(i: int, p: Form) -> Form:
    if i == 0 or p.__class__ is int:
        return p
    if len(p) == 3:
        return (POP, i + p[1], p[2])
    return (POP, i, p)


def pow(i: int, p: Form, q: Form) -> Form:
    if i <= 0:
        raise ValueError("pow exponent must be positive")
    if p.__class__ is int:
        if p == 0:
            return pop(1, q)
    elif len(p) == 4 and p[3] == 0:
        return (POW, i + p[1], p[2], q)
    return (POW, i, p, q)


# -- ring operations -----------------------------------------------------------

def add(x: Form, y: Form) -> Form:
    if x.__class__ is int:
        if y.__class__ is int:
            return x + y
        if x == 0:
            return y
        if len(y) == 3:
            return (POP, y[1], add(x, y[2]))
        return (POW, y[1], y[2], add(x, y[3]))
    if y.__class__ is int:
        return add(y, x)
    if len(x) == 3:
        i, p = x[1], x[2]
        if len(y) == 3:
            j, q = y[1], y[2]
            if i == j:
                return pop(i, add(p, q))
            if i > j:
                return pop(j, add((POP, i - j, p), q))
            return pop(i, add((POP, j - i, q), p))
        if i == 1:
            return (POW, y[1], y[2], add(y[3], p))
        return (POW, y[1], y[2], add(y[3], (POP, i - 1, p)))
    if len(y) == 3:
        return add(y, x)
    i, p, q = x[1], x[2], x[3]
    j, r, s = y[1], y[2], y[3]
    if i == j:
        return pow(i, add(p, r), add(q, s))
    if i > j:
        return pow(j, add((POW, i - j, p, 0), r), add(q, s))
    return pow(i, add((POW, j - i, r, 0), p), add(q, s))


def mul(x: Form, y: Form) -> Form:
    if x.__class__ is int:
        if y.__class__ is int:
            return x * y
        if x == 0:
            return 0
        if x == 1:
            return y
        if len(y) == 3:
            return pop(y[1], mul(x, y[2]))
        return pow(y[1], mul(x, y[2]), mul(x, y[3]))
    if y.__class__ is int:
        return mul(y, x)
    if len(x) == 3:
        i, p = x[1], x[2]
        if len(y) == 3:
            j, q = y[1], y[2]
            if i == j:
                return pop(i, mul(p, q))
            if i > j:
                return pop(j, mul((POP, i - j, p), q))
            return pop(i, mul((POP, j - i, q), p))
        if i == 1:
            return (POW, y[1], mul(x, y[2]), mul(p, y[3]))
        return (POW, y[1], mul(x, y[2]), mul((POP, i - 1, p), y[3]))
    if len(y) == 3:
        return mul(y, x)
    i, p, q = x[1], x[2], x[3]
    j, r, s = y[1], y[2], y[3]
    return add(add(pow(i + j, mul(p, r), mul(q, s)),
                   pow(i, mul(p, pop(1, s)), 0)),
               pow(j, mul(r, pop(1, q)), 0))


def neg(x: Form) -> Form:
    if x.__class__ is int:
        return -x
    if len(x) == 3:
        return (POP, x[1], neg(x[2]))
    return (POW, x[1], neg(x[2]), neg(x[3]))


def power(x: Form, k: int) -> Form:
    """``x**k`` as ``x * x**(k-1)``; the recursion is unrolled into a loop."""
    if k < 0:
        raise ValueError("negative exponent")
    r: Form = 1
    for _ in range(k):
        r = mul(x, r)
    return r


# -- normalization of terms ------------------------------------------------------

def norm(term: SExpr, variables: Sequence[str]) -> Form:
    """Sparse Horner normal form of ``term`` over ``variables``.

    Shared subterms (the nested group-law triples reuse components heavily)
    are normalized once.
    """
    variables = tuple(variables)
    validate_term(term, variables)
    index = {v: k for k, v in enumerate(variables)}
    memo: dict[int, Form] = {}

    def go(t):
        if t.__class__ is int:
            return t
        if t.__class__ is str:
            return pop(index[t], UNIT)
        r = memo.get(id(t))
        if r is not None:
            return r
        op = t[0]
        if op == "+":
            r = add(go(t[1]), go(t[2]))
        elif op == "*":
            r = mul(go(t[1]), go(t[2]))
        elif op == "-":
            if len(t) == 2:
                r = neg(go(t[1]))
            else:
                r = add(go(t[1]), neg(go(t[2])))
        elif op == "EXPT":
            r = power(go(t[1]), t[2])
        else:
            raise TermError(f"unknown operator {op}", t)
        memo[id(t)] = r
        return r

    return go(term)
