"""Hand-derived positive and negative cases for all 19 rules.

Expected premisses were worked out on paper from each rule's schema and
frozen as rendered sequent text; the tests compare against these strings,
never against the engine's own output.
"""

from __future__ import annotations

from dataclasses import dataclass

from gentzen.rules import DetailCode as D, EqRef, RuleId as R, Selection as Sel
from gentzen.syntax import Func, Var

_a = Func("a", ())
_b = Func("b", ())
_c = Func("c", ())
_d = Func("d", ())
_fc = Func("f", (_c,))
_gc = Func("g", (_c,))
_y = Var("y")


@dataclass(frozen=True)
class Pos:
    rule: R
    sequent: str
    sel: Sel
    expect: tuple[str, ...]  # rendered premisses, left to right


@dataclass(frozen=True)
class Neg:
    rule: R
    sequent: str
    sel: Sel
    detail: D


POSITIVE: tuple[Pos, ...] = (
    Pos(R.AndL, "P & Q ==> R", Sel(side="L", index=0), ("P, Q ==> R",)),
    Pos(R.AndR, "==> P & Q", Sel(side="R", index=0), ("==> P", "==> Q")),
    Pos(R.OrL, "P | Q ==> R", Sel(side="L", index=0), ("P ==> R", "Q ==> R")),
    Pos(R.OrR, "==> P | Q", Sel(side="R", index=0), ("==> P, Q",)),
    Pos(R.NotL, "~P, Q ==> R", Sel(side="L", index=0), ("Q ==> P, R",)),
    Pos(R.NotR, "Q ==> ~P, R", Sel(side="R", index=0), ("Q, P ==> R",)),
    Pos(
        R.ImpL, "P -> Q, S ==> R", Sel(side="L", index=0),
        ("Q, S ==> R", "S ==> P, R"),
    ),
    Pos(R.ImpR, "S ==> P -> Q, R", Sel(side="R", index=0), ("S, P ==> Q, R",)),
    Pos(R.ContrL, "P ==> Q", Sel(side="L", index=0), ("P, P ==> Q",)),
    Pos(R.ContrR, "P ==> Q", Sel(side="R", index=0), ("P ==> Q, Q",)),
    Pos(R.AxiomId, "P, Q ==> R, P", Sel(side="L", index=0, partner=1), ()),
    Pos(R.AxiomId, "Q ==> P, Q", Sel(side="R", index=1, partner=0), ()),
    Pos(R.AxiomRefl, "==> f(c) = f(c)", Sel(side="R", index=0), ()),
    Pos(
        R.ExL, "exists x. P(x) ==> Q", Sel(side="L", index=0, term=_b),
        ("P(b) ==> Q",),
    ),
    # without a proposal the engine picks a deterministic fresh name;
    # the binder name is taken, so the first suffixed variant is used
    Pos(R.ExL, "exists x. P(x) ==> Q", Sel(side="L", index=0), ("P(x1) ==> Q",)),
    Pos(
        R.ExR, "P(c) ==> exists x. P(x)", Sel(side="R", index=0, term=_c),
        ("P(c) ==> P(c)",),
    ),
    Pos(
        R.AllL, "forall x. P(x) ==> P(c)", Sel(side="L", index=0, term=_c),
        ("P(c) ==> P(c)",),
    ),
    Pos(
        R.AllR, "P(c) ==> forall x. P(x)", Sel(side="R", index=0, term=_d),
        ("P(c) ==> P(d)",),
    ),
    Pos(
        R.EqIntro, "P(c) ==> Q", Sel(side="L", index=1, term=_c),
        ("P(c), c = c ==> Q",),
    ),
    Pos(
        R.EqIntro, "P(f(c)) ==> Q", Sel(side="L", index=0, term=_fc),
        ("f(c) = f(c), P(f(c)) ==> Q",),
    ),
    Pos(
        R.SubstL, "a = b, P(a) ==> Q",
        Sel(side="L", index=1, eq=EqRef("L", 0), occ_path=(0,)),
        ("a = b, P(b) ==> Q",),
    ),
    Pos(
        R.SubstR, "a = b ==> P(a)",
        Sel(side="R", index=0, eq=EqRef("L", 0), occ_path=(0,)),
        ("a = b ==> P(b)",),
    ),
)

NEGATIVE: tuple[Neg, ...] = (
    Neg(R.AndL, "P | Q ==> R", Sel(side="L", index=0), D.WRONG_CONNECTIVE),
    Neg(R.AndL, "==> P & Q", Sel(side="R", index=0), D.WRONG_SIDE),
    Neg(R.AndR, "==> P | Q", Sel(side="R", index=0), D.WRONG_CONNECTIVE),
    Neg(R.AndR, "==> P & Q -> R", Sel(side="R", index=0, operator_path=(0,)), D.NOT_TOP_LEVEL),
    Neg(R.AndR, "P & Q ==> R", Sel(side="L", index=0), D.WRONG_SIDE),
    Neg(R.OrL, "P & Q ==> R", Sel(side="L", index=0), D.WRONG_CONNECTIVE),
    Neg(R.OrL, "P | Q ==> R", Sel(side="L", index=5), D.INDEX_OUT_OF_RANGE),
    Neg(R.OrR, "==> P & Q", Sel(side="R", index=0), D.WRONG_CONNECTIVE),
    Neg(R.OrR, "P | Q ==>", Sel(side="L", index=0), D.WRONG_SIDE),
    Neg(R.NotL, "P ==> Q", Sel(side="L", index=0), D.WRONG_CONNECTIVE),
    Neg(R.NotL, "==> ~P", Sel(side="R", index=0), D.WRONG_SIDE),
    Neg(R.NotR, "~P ==> Q", Sel(side="L", index=0), D.WRONG_SIDE),
    Neg(R.NotR, "==> P", Sel(side="R", index=0), D.WRONG_CONNECTIVE),
    Neg(R.ImpL, "P & Q ==> R", Sel(side="L", index=0), D.WRONG_CONNECTIVE),
    Neg(R.ImpL, "P -> Q ==> R", Sel(side="L", index=0, term=_a), D.UNEXPECTED_SELECTION_FIELD),
    Neg(R.ImpR, "==> P & Q", Sel(side="R", index=0), D.WRONG_CONNECTIVE),
    Neg(R.ImpR, "==> (P -> Q) & R", Sel(side="R", index=0, operator_path=(0,)), D.NOT_TOP_LEVEL),
    Neg(R.ContrL, "==> P", Sel(side="R", index=0), D.WRONG_SIDE),
    Neg(R.ContrL, "P ==> Q", Sel(side="L", index=1), D.INDEX_OUT_OF_RANGE),
    Neg(R.ContrR, "P ==> Q", Sel(side="L", index=0), D.WRONG_SIDE),
    Neg(R.ContrR, "P ==> Q", Sel(side="R", index=2), D.INDEX_OUT_OF_RANGE),
    Neg(R.AxiomId, "P ==> Q", Sel(side="L", index=0, partner=0), D.NO_MATCHING_PARTNER),
    Neg(R.AxiomId, "P ==> P", Sel(side="L", index=0), D.MISSING_SELECTION_FIELD),
    Neg(R.AxiomId, "P ==> P", Sel(side="L", index=0, partner=3), D.INDEX_OUT_OF_RANGE),
    Neg(R.AxiomRefl, "==> P", Sel(side="R", index=0), D.GOAL_NOT_AN_EQUALITY),
    Neg(R.AxiomRefl, "==> a = b", Sel(side="R", index=0), D.GOAL_NOT_REFLEXIVE),
    Neg(R.AxiomRefl, "a = a ==> Q", Sel(side="L", index=0), D.WRONG_SIDE),
    Neg(R.ExL, "exists x. P(x) ==> P(c)", Sel(side="L", index=0, term=_c), D.SKOLEM_NOT_FRESH),
    Neg(R.ExL, "exists x. P(x) ==> P(c)", Sel(side="L", index=0, term=_gc), D.SKOLEM_NOT_CONSTANT),
    Neg(R.ExL, "forall x. P(x) ==> Q", Sel(side="L", index=0), D.WRONG_CONNECTIVE),
    # a name only used as a bound variable still counts as occurring
    Neg(R.ExL, "exists x. P(x) ==> forall y. Q(y,y)", Sel(side="L", index=0, term=Func("y", ())), D.SKOLEM_NOT_FRESH),
    Neg(R.ExR, "P(c) ==> exists x. P(x)", Sel(side="R", index=0, term=_y), D.TERM_NOT_GROUND),
    Neg(R.ExR, "P(c) ==> exists x. P(x)", Sel(side="R", index=0, term=_gc), D.SYMBOL_OUTSIDE_SIGNATURE),
    Neg(R.ExR, "P(c) ==> exists x. P(x)", Sel(side="R", index=0), D.MISSING_SELECTION_FIELD),
    Neg(R.AllL, "forall x. P(x) ==> Q", Sel(side="L", index=0), D.MISSING_SELECTION_FIELD),
    Neg(R.AllL, "forall x. P(x) ==> P(c)", Sel(side="L", index=0, term=_d), D.SYMBOL_OUTSIDE_SIGNATURE),
    Neg(R.AllL, "forall x. P(x) ==> P(c)", Sel(side="L", index=0, term=_y), D.TERM_NOT_GROUND),
    Neg(R.AllR, "P(c) ==> forall x. P(x)", Sel(side="R", index=0, term=_c), D.SKOLEM_NOT_FRESH),
    Neg(R.AllR, "==> exists x. P(x)", Sel(side="R", index=0), D.WRONG_CONNECTIVE),
    Neg(R.AllR, "P(c) ==> forall x. P(x)", Sel(side="R", index=0, term=_fc), D.SKOLEM_NOT_CONSTANT),
    Neg(R.EqIntro, "P(c) ==> Q", Sel(side="L", index=0, term=_d), D.SYMBOL_OUTSIDE_SIGNATURE),
    Neg(R.EqIntro, "P(c) ==> Q", Sel(side="L", index=0), D.MISSING_SELECTION_FIELD),
    Neg(R.EqIntro, "P(c) ==> Q", Sel(side="L", index=0, term=_y), D.TERM_NOT_GROUND),
    Neg(R.EqIntro, "P(c) ==> Q", Sel(side="L", index=5, term=_c), D.INDEX_OUT_OF_RANGE),
    Neg(
        R.SubstL, "P, Q(a) ==> R",
        Sel(side="L", index=1, eq=EqRef("L", 0), occ_path=(0,)), D.EQ_NOT_AN_EQUALITY,
    ),
    Neg(
        R.SubstL, "a = b, P(c) ==> Q",
        Sel(side="L", index=1, eq=EqRef("L", 0), occ_path=(0,)), D.TERM_MISMATCH,
    ),
    Neg(
        R.SubstL, "a = b ==> Q",
        Sel(side="L", index=0, eq=EqRef("L", 0), occ_path=(0,)), D.EQ_IS_PRINCIPAL,
    ),
    Neg(
        R.SubstL, "a = b, P(a) ==> Q",
        Sel(side="L", index=1, eq=EqRef("L", 0), occ_path=(5,)), D.INVALID_PATH,
    ),
    Neg(
        R.SubstL, "a = b, P(a) ==> c = d",
        Sel(side="L", index=1, eq=EqRef("R", 0), occ_path=(0,)), D.EQ_NOT_IN_ANTECEDENT,
    ),
    Neg(
        R.SubstR, "a = b ==> f(b) = c",
        Sel(side="R", index=0, eq=EqRef("L", 0), occ_path=(0, 0)), D.TERM_MISMATCH,
    ),
    Neg(
        R.SubstR, "P ==> a = a",
        Sel(side="R", index=0, eq=EqRef("R", 0), occ_path=(0,)), D.EQ_NOT_IN_ANTECEDENT,
    ),
    Neg(
        R.SubstR, "a = b ==> P(a) & Q",
        Sel(side="R", index=0, eq=EqRef("L", 0), occ_path=()), D.INVALID_PATH,
    ),
    Neg(
        R.SubstR, "a = b ==> P(a)",
        Sel(side="R", index=0, eq=EqRef("L", 0)), D.MISSING_SELECTION_FIELD,
    ),
)
