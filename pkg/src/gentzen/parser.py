"""Concrete syntax: tokenizer and recursive-descent parser.

Grammar summary (the full EBNF ships in docs/grammar.ebnf):

* identifiers are a letter followed by letters/digits; predicates start
  uppercase, functions and constants lowercase
* connectives ``~  &  |  ->`` with precedence ``~ > & > | > ->``;
  ``->`` is right-associative, ``&`` and ``|`` left-associative
* ``forall x.`` / ``exists x.`` bind a prefix of quantifiers to a single
  dot; the dot scopes to the end of the enclosing parenthesized group
* equality ``=`` between terms; a sequent is two comma-separated formula
  lists around ``==>``, either side possibly empty

Whether a lowercase nullary identifier is a variable or a constant is
decided by the binding context: bound names become ``Var``, everything
else a 0-ary ``Func``.
"""

from __future__ import annotations

import re
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
    Pred,
    Sequent,
    Term,
    Var,
)

_RESERVED = ("forall", "exists")

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<ident>[A-Za-z][A-Za-z0-9]*)
    | (?P<seqarrow>==>)
    | (?P<imp>->)
    | (?P<eq>=)
    | (?P<neg>~)
    | (?P<conj>&)
    | (?P<disj>\|)
    | (?P<lpar>\()
    | (?P<rpar>\))
    | (?P<comma>,)
    | (?P<dot>\.)
    """,
    re.VERBOSE,
)

_SHOW = {
    "seqarrow": "'==>'",
    "imp": "'->'",
    "eq": "'='",
    "neg": "'~'",
    "conj": "'&'",
    "disj": "'|'",
    "lpar": "'('",
    "rpar": "')'",
    "comma": "','",
    "dot": "'.'",
    "ident": "identifier",
    "eof": "end of input",
}


class ParseError(Exception):
    """Parse failure with the offset and the tokens that were expected."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        super().__init__(f"offset {offset}: {message}")
        self.message = message
        self.offset = offset
        self.expected = expected


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        if kind != "ws":
            word = m.group()
            if kind == "ident" and word in _RESERVED:
                kind = word
            toks.append(_Tok(kind, word, pos))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.bound: list[str] = []
        self.arities: dict[tuple[str, str], int] = {}

    # -- token plumbing

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(
                f"expected {_SHOW[kind]}, found {_SHOW.get(tok.kind, tok.text)!s}",
                tok.pos,
                expected=(_SHOW[kind],),
            )
        return self.next()

    def expect_end(self) -> None:
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(
                f"unexpected {tok.text!r} after a complete input", tok.pos,
                expected=(_SHOW["eof"],),
            )

    def record(self, kind: str, name: str, arity: int, pos: int) -> None:
        key = (kind, name)
        old = self.arities.setdefault(key, arity)
        if old != arity:
            raise ParseError(
                f"arity mismatch: {name} used with {arity} argument(s) "
                f"but earlier with {old}",
                pos,
            )

    # -- formulas, by precedence level

    def formula(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "imp":
            self.next()
            return Imp(left, self.formula())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek().kind == "disj":
            self.next()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek().kind == "conj":
            self.next()
            left = And(left, self.unary())
        return left

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "neg":
            self.next()
            return Not(self.unary())
        if tok.kind in _RESERVED:
            return self.quantified()
        if tok.kind == "lpar":
            self.next()
            f = self.formula()
            self.expect("rpar")
            return f
        if tok.kind == "ident":
            if tok.text[0].isupper():
                return self.predicate()
            lhs = self.term()
            self.expect("eq")
            rhs = self.term()
            return Eq(lhs, rhs)
        raise ParseError(
            f"expected a formula, found {_SHOW.get(tok.kind, tok.text)}",
            tok.pos,
            expected=("'('", "'~'", "'forall'", "'exists'", "identifier"),
        )

    def quantified(self) -> Formula:
        # A prefix like `forall x exists y.` shares one dot; the body then
        # extends to the end of the enclosing group.
        binders: list[tuple[str, str]] = []
        while self.peek().kind in _RESERVED:
            kw = self.next()
            name_tok = self.expect("ident")
            if not name_tok.text[0].islower():
                raise ParseError(
                    f"bound variable must start lowercase: {name_tok.text}",
                    name_tok.pos,
                )
            binders.append((kw.kind, name_tok.text))
        self.expect("dot")
        for _, name in binders:
            self.bound.append(name)
        body = self.formula()
        for _ in binders:
            self.bound.pop()
        for kw, name in reversed(binders):
            body = Forall(name, body) if kw == "forall" else Exists(name, body)
        return body

    def predicate(self) -> Formula:
        name_tok = self.next()
        args: list[Term] = []
        if self.peek().kind == "lpar":
            self.next()
            args.append(self.term())
            while self.peek().kind == "comma":
                self.next()
                args.append(self.term())
            self.expect("rpar")
        self.record("pred", name_tok.text, len(args), name_tok.pos)
        return Pred(name_tok.text, tuple(args))

    # -- terms

    def term(self) -> Term:
        tok = self.peek()
        if tok.kind in _RESERVED:
            raise ParseError(f"{tok.text} is a reserved word", tok.pos)
        if tok.kind != "ident" or not tok.text[0].islower():
            raise ParseError(
                f"expected a term, found {_SHOW.get(tok.kind, tok.text)}",
                tok.pos,
                expected=("identifier",),
            )
        self.next()
        if self.peek().kind == "lpar":
            if tok.text in self.bound:
                raise ParseError(
                    f"bound variable {tok.text} cannot take arguments", tok.pos
                )
            self.next()
            args = [self.term()]
            while self.peek().kind == "comma":
                self.next()
                args.append(self.term())
            self.expect("rpar")
            self.record("func", tok.text, len(args), tok.pos)
            return Func(tok.text, tuple(args))
        if tok.text in self.bound:
            return Var(tok.text)
        self.record("func", tok.text, 0, tok.pos)
        return Func(tok.text, ())

    # -- sequents

    def sequent(self) -> Sequent:
        ante: list[Formula] = []
        succ: list[Formula] = []
        if self.peek().kind not in ("seqarrow", "eof"):
            ante.append(self.formula())
            while self.peek().kind == "comma":
                self.next()
                ante.append(self.formula())
        self.expect("seqarrow")
        if self.peek().kind != "eof":
            succ.append(self.formula())
            while self.peek().kind == "comma":
                self.next()
                succ.append(self.formula())
        return Sequent(tuple(ante), tuple(succ))


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    f = p.formula()
    p.expect_end()
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.expect_end()
    return t


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    s = p.sequent()
    p.expect_end()
    return s
