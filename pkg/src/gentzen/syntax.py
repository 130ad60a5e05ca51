"""Abstract syntax for first-order logic with equality.

Terms and formulas are immutable trees.  Every subnode is addressed by a
*path*, the tuple of child indices leading to it from the root; paths are
the currency shared with span maps, the rule engine and the HTTP API.
Variables and constants are distinguished structurally: a constant is a
0-ary function symbol, a ``Var`` only ever denotes a bound occurrence.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

Path = tuple[int, ...]


class PathError(ValueError):
    """A path does not address a node of the expected kind."""


class SignatureError(ValueError):
    """One symbol is used with two different arities."""


# ---------------------------------------------------------------- terms


class Term:
    __hash__ = object.__hash__

    def __str__(self) -> str:
        from .printer import print_term

        return print_term(self)


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Func(Term):
    name: str
    args: tuple[Term, ...] = ()


def const(name: str) -> Func:
    return Func(name, ())


# ------------------------------------------------------------- formulas


class Formula:
    __hash__ = object.__hash__

    def __str__(self) -> str:
        from .printer import print_formula

        return print_formula(self)[0]


@dataclass(frozen=True)
class Pred(Formula):
    name: str
    args: tuple[Term, ...] = ()


@dataclass(frozen=True)
class Eq(Formula):
    lhs: Term
    rhs: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


Node = Union[Term, Formula]

_HEAD_SYMBOL = {
    Var: "variable",
    Func: "term",
    Pred: "atom",
    Eq: "=",
    Not: "~",
    And: "&",
    Or: "|",
    Imp: "->",
    Forall: "forall",
    Exists: "exists",
}


def head_symbol(node: Node) -> str:
    """Concrete-syntax symbol of the outermost constructor (for messages)."""
    return _HEAD_SYMBOL[type(node)]


def children(node: Node) -> tuple[Node, ...]:
    if isinstance(node, Var):
        return ()
    if isinstance(node, (Func, Pred)):
        return node.args
    if isinstance(node, Eq):
        return (node.lhs, node.rhs)
    if isinstance(node, Not):
        return (node.body,)
    if isinstance(node, (And, Or, Imp)):
        return (node.left, node.right)
    if isinstance(node, (Forall, Exists)):
        return (node.body,)
    raise TypeError(f"not a syntax node: {node!r}")


def with_children(node: Node, kids: tuple[Node, ...]) -> Node:
    """Rebuild ``node`` with the given children, keeping its own label."""
    if isinstance(node, Var):
        return node
    if isinstance(node, Func):
        return Func(node.name, kids)
    if isinstance(node, Pred):
        return Pred(node.name, kids)
    if isinstance(node, Eq):
        return Eq(kids[0], kids[1])
    if isinstance(node, Not):
        return Not(kids[0])
    if isinstance(node, (And, Or, Imp)):
        return type(node)(kids[0], kids[1])
    if isinstance(node, (Forall, Exists)):
        return type(node)(node.var, kids[0])
    raise TypeError(f"not a syntax node: {node!r}")


def node_at(root: Node, path: Path) -> Node:
    node = root
    for k in path:
        kids = children(node)
        if not 0 <= k < len(kids):
            raise PathError(f"path {list(path)} leaves the tree at index {k}")
        node = kids[k]
    return node


def subnodes(root: Node) -> Iterator[tuple[Path, Node]]:
    """All (path, node) pairs in preorder, root first."""
    stack: list[tuple[Path, Node]] = [((), root)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = children(node)
        for k in range(len(kids) - 1, -1, -1):
            stack.append((path + (k,), kids[k]))


def is_ground(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    return all(is_ground(a) for a in t.args)  # type: ignore[union-attr]


def first_var(t: Term) -> str | None:
    """Name of some variable occurring in ``t``, or None if ground."""
    if isinstance(t, Var):
        return t.name
    for a in t.args:  # type: ignore[union-attr]
        v = first_var(a)
        if v is not None:
            return v
    return None


def replace_at(root: Node, path: Path, t: Term) -> Node:
    """Replace exactly the term occurrence at ``path`` by ``t``.

    Every other node is kept; the target must be a Term and ``t`` must be
    ground (so no capture can happen).
    """
    if not is_ground(t):
        raise ValueError(f"replacement term is not ground: {t}")

    def go(node: Node, depth: int) -> Node:
        if depth == len(path):
            if not isinstance(node, Term):
                raise PathError(f"path {list(path)} addresses a formula, not a term")
            return t
        kids = children(node)
        k = path[depth]
        if not 0 <= k < len(kids):
            raise PathError(f"path {list(path)} leaves the tree at index {k}")
        new_kid = go(kids[k], depth + 1)
        return with_children(node, kids[:k] + (new_kid,) + kids[k + 1 :])

    return go(root, 0)


def _subst_term(t: Term, var: str, repl: Term) -> Term:
    if isinstance(t, Var):
        return repl if t.name == var else t
    return Func(t.name, tuple(_subst_term(a, var, repl) for a in t.args))  # type: ignore[union-attr]


def substitute(f: Formula, var: str, t: Term) -> Formula:
    """Replace every free occurrence of ``var`` in ``f`` by the ground term ``t``."""
    if not is_ground(t):
        raise ValueError(f"substitution term is not ground: {t}")

    def go(node: Formula) -> Formula:
        if isinstance(node, Pred):
            return Pred(node.name, tuple(_subst_term(a, var, t) for a in node.args))
        if isinstance(node, Eq):
            return Eq(_subst_term(node.lhs, var, t), _subst_term(node.rhs, var, t))
        if isinstance(node, Not):
            return Not(go(node.body))
        if isinstance(node, (And, Or, Imp)):
            return type(node)(go(node.left), go(node.right))
        if isinstance(node, (Forall, Exists)):
            if node.var == var:
                return node  # rebinding shadows the substitution
            return type(node)(node.var, go(node.body))
        raise TypeError(f"not a formula: {node!r}")

    return go(f)


# ------------------------------------------------------------- sequents


@dataclass(frozen=True)
class Sequent:
    """Antecedent and succedent, ordered lists with multiset meaning.

    Duplicates are allowed and significant; the order is only a stable
    display artifact, which the rules preserve deterministically.
    """

    antecedent: tuple[Formula, ...]
    succedent: tuple[Formula, ...]

    def side(self, which: str) -> tuple[Formula, ...]:
        if which == "L":
            return self.antecedent
        if which == "R":
            return self.succedent
        raise ValueError(f"side must be 'L' or 'R', got {which!r}")

    def formulas(self) -> Iterator[Formula]:
        yield from self.antecedent
        yield from self.succedent

    def __str__(self) -> str:
        from .printer import print_sequent

        return print_sequent(self)


# ----------------------------------------------------------- signatures


@dataclass(frozen=True)
class Signature:
    """Predicate and function symbols with their arities.

    Equality is a logical symbol and never part of a signature.
    """

    preds: dict[str, int]
    funcs: dict[str, int]

    def has_symbol(self, name: str) -> bool:
        return name in self.preds or name in self.funcs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Signature)
            and self.preds == other.preds
            and self.funcs == other.funcs
        )


def _collect(node: Node, preds: dict[str, int], funcs: dict[str, int]) -> None:
    for _, sub in subnodes(node):
        if isinstance(sub, Pred):
            old = preds.setdefault(sub.name, len(sub.args))
            if old != len(sub.args):
                raise SignatureError(
                    f"predicate {sub.name} used with arities {old} and {len(sub.args)}"
                )
        elif isinstance(sub, Func):
            old = funcs.setdefault(sub.name, len(sub.args))
            if old != len(sub.args):
                raise SignatureError(
                    f"function {sub.name} used with arities {old} and {len(sub.args)}"
                )


def signature_of(obj: Union[Node, Sequent]) -> Signature:
    """Exactly the symbols occurring in ``obj``, with consistent arities."""
    preds: dict[str, int] = {}
    funcs: dict[str, int] = {}
    if isinstance(obj, Sequent):
        for f in obj.formulas():
            _collect(f, preds, funcs)
    else:
        _collect(obj, preds, funcs)
    return Signature(preds, funcs)


def var_names(obj: Union[Node, Sequent]) -> frozenset[str]:
    """All names used as a bound variable or binder anywhere in ``obj``."""
    names: set[str] = set()
    items = obj.formulas() if isinstance(obj, Sequent) else (obj,)
    for f in items:
        for _, sub in subnodes(f):
            if isinstance(sub, Var):
                names.add(sub.name)
            elif isinstance(sub, (Forall, Exists)):
                names.add(sub.var)
    return frozenset(names)


def is_ground_over(t: Term, sig: Signature) -> bool:
    """True iff ``t`` has no variables and uses only symbols of ``sig``."""
    if isinstance(t, Var):
        return False
    assert isinstance(t, Func)
    if sig.funcs.get(t.name) != len(t.args):
        return False
    return all(is_ground_over(a, sig) for a in t.args)


def first_unknown_symbol(t: Term, sig: Signature) -> str | None:
    """Some function symbol of ``t`` missing from ``sig`` (wrong arity counts)."""
    if isinstance(t, Var):
        return None
    assert isinstance(t, Func)
    if sig.funcs.get(t.name) != len(t.args):
        return t.name
    for a in t.args:
        bad = first_unknown_symbol(a, sig)
        if bad is not None:
            return bad
    return None


def fresh_constant(sig: Signature, hint: str, avoid: frozenset[str] = frozenset()) -> str:
    """``hint`` if unused, else the hint with the smallest numeric suffix.

    ``avoid`` adds names beyond the signature (e.g. variable names of a
    sequent) that the result must also miss.  Deterministic.
    """
    taken = set(sig.preds) | set(sig.funcs) | set(avoid)
    if hint not in taken:
        return hint
    for n in itertools.count(1):
        cand = f"{hint}{n}"
        if cand not in taken:
            return cand
    raise AssertionError("unreachable")


def is_closed(f: Formula) -> bool:
    """True iff every variable occurrence sits under a binder of that name."""

    def go(node: Formula, bound: frozenset[str]) -> bool:
        if isinstance(node, (Pred, Eq)):
            return all(
                not isinstance(sub, Var) or sub.name in bound
                for _, sub in subnodes(node)
            )
        if isinstance(node, Not):
            return go(node.body, bound)
        if isinstance(node, (And, Or, Imp)):
            return go(node.left, bound) and go(node.right, bound)
        if isinstance(node, (Forall, Exists)):
            return go(node.body, bound | {node.var})
        raise TypeError(f"not a formula: {node!r}")

    return go(f, frozenset())
