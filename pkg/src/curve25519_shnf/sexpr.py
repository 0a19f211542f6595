"""S-expressions: integers, symbols and ordered sequences.

Integers are Python ``int``, symbols are uppercase ``str`` and sequences are
``tuple``.  Using plain immutable builtins means structural equality is just
``==`` and trees can be shared freely.
"""

from __future__ import annotations

import re
from typing import Union

SExpr = Union[int, str, tuple]

_SYMBOL_RE = re.compile(r"[A-Za-z0-9+\-*_]+\Z")
_INT_RE = re.compile(r"-?[0-9]+\Z")


class SExprSyntaxError(ValueError):
    """Malformed S-expression text; ``pos`` is the character offset."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def strip_comments(text: str) -> str:
    """Drop ``;`` comments running to end of line."""
    return "\n".join(line.split(";", 1)[0] for line in text.splitlines())


def _tokenize(text: str):
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "()":
            yield c, i
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "()":
                j += 1
            yield text[i:j], i
            i = j


def _atom(tok: str, pos: int) -> SExpr:
    if _INT_RE.match(tok):
        return int(tok)
    if tok[0].isdigit() or not _SYMBOL_RE.match(tok):
        raise SExprSyntaxError(f"malformed token {tok!r}", pos)
    return tok.upper()


def parse(text: str) -> SExpr:
    """Parse exactly one S-expression from ``text``."""
    stack: list[list] = []
    result = None
    done = False
    for tok, pos in _tokenize(text):
        if done:
            raise SExprSyntaxError("trailing input", pos)
        if tok == "(":
            stack.append([])
            continue
        if tok == ")":
            if not stack:
                raise SExprSyntaxError("unbalanced ')'", pos)
            value = tuple(stack.pop())
        else:
            value = _atom(tok, pos)
        if stack:
            stack[-1].append(value)
        else:
            result, done = value, True
    if stack:
        raise SExprSyntaxError("unbalanced '('", len(text))
    if not done:
        raise SExprSyntaxError("empty input", len(text))
    return result


_CLOSE = object()
_SPACE = object()


def render(s: SExpr) -> str:
    """Canonical text: single spaces, no trailing whitespace."""
    out: list[str] = []
    stack = [s]
    while stack:
        x = stack.pop()
        if x is _CLOSE:
            out.append(")")
        elif isinstance(x, tuple):
            out.append("(")
            stack.append(_CLOSE)
            for k in range(len(x) - 1, -1, -1):
                stack.append(x[k])
                if k:
                    stack.append(_SPACE)
        elif x is _SPACE:
            out.append(" ")
        else:
            out.append(str(x))
    return "".join(out)


def head(s: tuple) -> SExpr:
    if not isinstance(s, tuple) or not s:
        raise ValueError("head of an atom or empty sequence")
    return s[0]


def suffix(s: tuple, k: int) -> tuple:
    """Elements ``k..end`` of ``s``."""
    if not isinstance(s, tuple):
        raise ValueError("suffix of an atom")
    if k < 0 or k > len(s):
        raise ValueError(f"suffix index {k} out of range for length {len(s)}")
    return s[k:]
