"""Minimal-parentheses rendering with span maps.

``print_formula`` returns both the text and a :class:`SpanMap` giving, for
every subnode path, the character range covering that node's full scope.
The UI highlights exactly these ranges when an operator or symbol is
clicked; spans exclude any parentheses the printer adds around a node.

Quantifiers need one non-standard rule: their dot scopes to the end of
the enclosing group, so a quantified subformula is parenthesized exactly
when more text would follow it inside the same group ("tail position"
needs no parentheses).  Directly nested quantifiers print as one prefix
with a single dot, e.g. ``forall x forall y. E(x,y) -> x = f(y)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Func,
    Imp,
    Not,
    Or,
    Path,
    Pred,
    Sequent,
    Term,
    Var,
)

_PREC_IMP, _PREC_OR, _PREC_AND, _PREC_NOT = 0, 1, 2, 3

_BIN: dict[type, tuple[int, str]] = {
    Imp: (_PREC_IMP, "->"),
    Or: (_PREC_OR, "|"),
    And: (_PREC_AND, "&"),
}


@dataclass(frozen=True)
class SpanMap:
    """Node path -> (start, end) character range in the printed text."""

    entries: dict[Path, tuple[int, int]]

    def __getitem__(self, path: Path) -> tuple[int, int]:
        return self.entries[path]

    def __contains__(self, path: Path) -> bool:
        return path in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def items(self):
        return self.entries.items()


class _Emitter:
    def __init__(self) -> None:
        self.parts: list[str] = []
        self.pos = 0
        self.spans: dict[Path, tuple[int, int]] = {}

    def emit(self, s: str) -> None:
        self.parts.append(s)
        self.pos += len(s)

    def mark(self, path: Path, start: int) -> None:
        self.spans[path] = (start, self.pos)

    def text(self) -> str:
        return "".join(self.parts)


def _term(em: _Emitter, t: Term, path: Path) -> None:
    start = em.pos
    if isinstance(t, Var):
        em.emit(t.name)
    else:
        assert isinstance(t, Func)
        em.emit(t.name)
        if t.args:
            em.emit("(")
            for i, a in enumerate(t.args):
                if i:
                    em.emit(",")
                _term(em, a, path + (i,))
            em.emit(")")
    em.mark(path, start)


def _quantifier_prefix(em: _Emitter, f: Formula, path: Path) -> None:
    chain: list[tuple[Formula, Path]] = []
    node: Formula = f
    p = path
    while isinstance(node, (Forall, Exists)):
        chain.append((node, p))
        p = p + (0,)
        node = node.body
    starts: list[int] = []
    for i, (qnode, _) in enumerate(chain):
        if i:
            em.emit(" ")
        starts.append(em.pos)
        kw = "forall" if isinstance(qnode, Forall) else "exists"
        em.emit(f"{kw} {qnode.var}")  # type: ignore[union-attr]
    em.emit(". ")
    _formula(em, node, p, 0, tail=True)
    end = em.pos
    for (qnode, qpath), s in zip(chain, starts):
        em.spans[qpath] = (s, end)


def _formula(em: _Emitter, f: Formula, path: Path, min_level: int, tail: bool) -> None:
    if isinstance(f, (Forall, Exists)):
        if tail:
            _quantifier_prefix(em, f, path)
        else:
            em.emit("(")
            _quantifier_prefix(em, f, path)
            em.emit(")")
        return
    if isinstance(f, Not):
        start = em.pos
        em.emit("~")
        _formula(em, f.body, path + (0,), _PREC_NOT, tail)
        em.mark(path, start)
        return
    if isinstance(f, (And, Or, Imp)):
        prec, op = _BIN[type(f)]
        parens = prec < min_level
        if parens:
            em.emit("(")
        start = em.pos
        inner_tail = True if parens else tail
        if isinstance(f, Imp):
            left_min, right_min = prec + 1, prec
        else:  # left-associative
            left_min, right_min = prec, prec + 1
        _formula(em, f.left, path + (0,), left_min, tail=False)
        em.emit(f" {op} ")
        _formula(em, f.right, path + (1,), right_min, tail=inner_tail)
        em.mark(path, start)
        if parens:
            em.emit(")")
        return
    if isinstance(f, Pred):
        start = em.pos
        em.emit(f.name)
        if f.args:
            em.emit("(")
            for i, a in enumerate(f.args):
                if i:
                    em.emit(",")
                _term(em, a, path + (i,))
            em.emit(")")
        em.mark(path, start)
        return
    if isinstance(f, Eq):
        start = em.pos
        _term(em, f.lhs, path + (0,))
        em.emit(" = ")
        _term(em, f.rhs, path + (1,))
        em.mark(path, start)
        return
    raise TypeError(f"not a formula: {f!r}")


def print_formula(f: Formula) -> tuple[str, SpanMap]:
    em = _Emitter()
    _formula(em, f, (), 0, tail=True)
    return em.text(), SpanMap(dict(em.spans))


def print_term(t: Term) -> str:
    em = _Emitter()
    _term(em, t, ())
    return em.text()


def print_sequent(s: Sequent) -> str:
    left = ", ".join(print_formula(f)[0] for f in s.antecedent)
    right = ", ".join(print_formula(f)[0] for f in s.succedent)
    if left and right:
        return f"{left} ==> {right}"
    if left:
        return f"{left} ==>"
    if right:
        return f"==> {right}"
    return "==>"
