"""The 19 sequent-calculus rules as total, validating functions.

``apply_rule`` never raises on a bad application: it returns a
:class:`Diagnostic` that says what went wrong and which of the mistake
categories it falls into.  The categories follow the classic taxonomy of
rule-application errors:

* ``Confused``   - right position, wrong rule (e.g. a conjunction rule on
  a disjunction, or a left rule on the right side)
* ``Misplaced``  - rule aimed at a genuine subformula or at an ingredient
  taken from the wrong place
* ``WrongFOInstantiation`` - freshness/groundness violations of the
  quantifier and equality side conditions
* ``WrongRuleInstantiation`` - malformed usage of the rule itself
  (missing or extra selection parts, bad indices or paths)
* ``NotApplicable`` - an axiom check that simply does not hold

Successful applications are deterministic and local: the principal
formula is replaced in place, side formulas keep their relative order,
and formulas moved to the other side are appended after the antecedent
("Gamma, phi") or prepended before the succedent ("phi, Delta").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Union

from .printer import print_formula, print_term
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
    PathError,
    Sequent,
    Term,
    first_unknown_symbol,
    first_var,
    fresh_constant,
    head_symbol,
    node_at,
    replace_at,
    signature_of,
    substitute,
    var_names,
)


class RuleId(str, Enum):
    AndL = "AndL"
    AndR = "AndR"
    OrL = "OrL"
    OrR = "OrR"
    NotL = "NotL"
    NotR = "NotR"
    ImpL = "ImpL"
    ImpR = "ImpR"
    ContrL = "ContrL"
    ContrR = "ContrR"
    AxiomId = "AxiomId"
    AxiomRefl = "AxiomRefl"
    ExL = "ExL"
    ExR = "ExR"
    AllL = "AllL"
    AllR = "AllR"
    EqIntro = "EqIntro"
    SubstL = "SubstL"
    SubstR = "SubstR"


class MistakeCategory(str, Enum):
    Confused = "Confused"
    Misplaced = "Misplaced"
    WrongFOInstantiation = "WrongFOInstantiation"
    WrongRuleInstantiation = "WrongRuleInstantiation"
    NotApplicable = "NotApplicable"


class DetailCode(str, Enum):
    WRONG_CONNECTIVE = "WRONG_CONNECTIVE"
    WRONG_SIDE = "WRONG_SIDE"
    NOT_TOP_LEVEL = "NOT_TOP_LEVEL"
    EQ_NOT_IN_ANTECEDENT = "EQ_NOT_IN_ANTECEDENT"
    SKOLEM_NOT_FRESH = "SKOLEM_NOT_FRESH"
    SKOLEM_NOT_CONSTANT = "SKOLEM_NOT_CONSTANT"
    TERM_NOT_GROUND = "TERM_NOT_GROUND"
    SYMBOL_OUTSIDE_SIGNATURE = "SYMBOL_OUTSIDE_SIGNATURE"
    TERM_MISMATCH = "TERM_MISMATCH"
    MISSING_SELECTION_FIELD = "MISSING_SELECTION_FIELD"
    UNEXPECTED_SELECTION_FIELD = "UNEXPECTED_SELECTION_FIELD"
    INDEX_OUT_OF_RANGE = "INDEX_OUT_OF_RANGE"
    INVALID_PATH = "INVALID_PATH"
    EQ_NOT_AN_EQUALITY = "EQ_NOT_AN_EQUALITY"
    EQ_IS_PRINCIPAL = "EQ_IS_PRINCIPAL"
    NO_MATCHING_PARTNER = "NO_MATCHING_PARTNER"
    GOAL_NOT_AN_EQUALITY = "GOAL_NOT_AN_EQUALITY"
    GOAL_NOT_REFLEXIVE = "GOAL_NOT_REFLEXIVE"


# The category is a pure function of the detail code.
CATEGORY_OF: dict[DetailCode, MistakeCategory] = {
    DetailCode.WRONG_CONNECTIVE: MistakeCategory.Confused,
    DetailCode.WRONG_SIDE: MistakeCategory.Confused,
    DetailCode.NOT_TOP_LEVEL: MistakeCategory.Misplaced,
    DetailCode.EQ_NOT_IN_ANTECEDENT: MistakeCategory.Misplaced,
    DetailCode.SKOLEM_NOT_FRESH: MistakeCategory.WrongFOInstantiation,
    DetailCode.SKOLEM_NOT_CONSTANT: MistakeCategory.WrongFOInstantiation,
    DetailCode.TERM_NOT_GROUND: MistakeCategory.WrongFOInstantiation,
    DetailCode.SYMBOL_OUTSIDE_SIGNATURE: MistakeCategory.WrongFOInstantiation,
    DetailCode.TERM_MISMATCH: MistakeCategory.WrongFOInstantiation,
    DetailCode.MISSING_SELECTION_FIELD: MistakeCategory.WrongRuleInstantiation,
    DetailCode.UNEXPECTED_SELECTION_FIELD: MistakeCategory.WrongRuleInstantiation,
    DetailCode.INDEX_OUT_OF_RANGE: MistakeCategory.WrongRuleInstantiation,
    DetailCode.INVALID_PATH: MistakeCategory.WrongRuleInstantiation,
    DetailCode.EQ_NOT_AN_EQUALITY: MistakeCategory.WrongRuleInstantiation,
    DetailCode.EQ_IS_PRINCIPAL: MistakeCategory.WrongRuleInstantiation,
    DetailCode.NO_MATCHING_PARTNER: MistakeCategory.NotApplicable,
    DetailCode.GOAL_NOT_AN_EQUALITY: MistakeCategory.NotApplicable,
    DetailCode.GOAL_NOT_REFLEXIVE: MistakeCategory.NotApplicable,
}


class AxiomKind(str, Enum):
    Id = "Id"
    Refl = "Refl"


@dataclass(frozen=True)
class EqRef:
    """Position of the equality atom chosen for a substitution rule."""

    side: str
    index: int


@dataclass(frozen=True)
class Selection:
    """Where a rule is applied and with which ingredients.

    Which fields must be present depends on the rule: ``term`` carries the
    instantiation term of AllL/ExR/EqIntro (and an optional Skolem-name
    proposal for ExL/AllR), ``eq``/``occ_path`` drive SubstL/SubstR, and
    ``partner`` names the matching formula for AxiomId.  ``operator_path``
    is the node path of the operator the user clicked; anything other
    than the formula root is rejected as a misplaced application.
    """

    side: str | None = None
    index: int | None = None
    operator_path: Path | None = None
    term: Term | None = None
    eq: EqRef | None = None
    occ_path: Path | None = None
    partner: int | None = None


@dataclass(frozen=True)
class Diagnostic:
    """Machine-readable rejection of one rule application."""

    rule: RuleId
    detail: DetailCode
    selection: Selection
    payload: dict[str, str] = field(default_factory=dict)

    @property
    def category(self) -> MistakeCategory:
        return CATEGORY_OF[self.detail]


def classify(d: Diagnostic) -> MistakeCategory:
    return CATEGORY_OF[d.detail]


# ------------------------------------------------------- rule metadata


@dataclass(frozen=True)
class RuleSchema:
    """Formal shape of a rule, rendered in the concrete grammar."""

    premisses: tuple[str, ...]
    conclusion: str


RULE_SCHEMAS: dict[RuleId, RuleSchema] = {
    RuleId.AndL: RuleSchema(("Γ, φ, ψ ==> Δ",), "Γ, φ & ψ ==> Δ"),
    RuleId.AndR: RuleSchema(("Γ ==> φ, Δ", "Γ ==> ψ, Δ"), "Γ ==> φ & ψ, Δ"),
    RuleId.OrL: RuleSchema(("Γ, φ ==> Δ", "Γ, ψ ==> Δ"), "Γ, φ | ψ ==> Δ"),
    RuleId.OrR: RuleSchema(("Γ ==> φ, ψ, Δ",), "Γ ==> φ | ψ, Δ"),
    RuleId.NotL: RuleSchema(("Γ ==> φ, Δ",), "Γ, ~φ ==> Δ"),
    RuleId.NotR: RuleSchema(("Γ, φ ==> Δ",), "Γ ==> ~φ, Δ"),
    RuleId.ImpL: RuleSchema(("Γ, ψ ==> Δ", "Γ ==> φ, Δ"), "Γ, φ -> ψ ==> Δ"),
    RuleId.ImpR: RuleSchema(("Γ, φ ==> ψ, Δ",), "Γ ==> φ -> ψ, Δ"),
    RuleId.ContrL: RuleSchema(("Γ, φ, φ ==> Δ",), "Γ, φ ==> Δ"),
    RuleId.ContrR: RuleSchema(("Γ ==> φ, φ, Δ",), "Γ ==> φ, Δ"),
    RuleId.AxiomId: RuleSchema((), "Γ, φ ==> φ, Δ"),
    RuleId.AxiomRefl: RuleSchema((), "Γ ==> s = s, Δ"),
    RuleId.ExL: RuleSchema(("Γ, φ[c/x] ==> Δ",), "Γ, exists x. φ ==> Δ"),
    RuleId.ExR: RuleSchema(("Γ ==> φ[t/x], Δ",), "Γ ==> exists x. φ, Δ"),
    RuleId.AllL: RuleSchema(("Γ, φ[t/x] ==> Δ",), "Γ, forall x. φ ==> Δ"),
    RuleId.AllR: RuleSchema(("Γ ==> φ[c/x], Δ",), "Γ ==> forall x. φ, Δ"),
    RuleId.EqIntro: RuleSchema(("Γ, s = s ==> Δ",), "Γ ==> Δ"),
    RuleId.SubstL: RuleSchema(("Γ, φ[s'/x] ==> Δ",), "Γ, s = s', φ[s/x] ==> Δ"),
    RuleId.SubstR: RuleSchema(("Γ ==> φ[s'/x], Δ",), "Γ, s = s' ==> φ[s/x], Δ"),
}


@dataclass(frozen=True)
class _RuleShape:
    side: str | None  # required side; None means either (AxiomId)
    connective: type | None  # expected head of the principal formula
    required: frozenset[str] = frozenset()
    optional: frozenset[str] = frozenset()


_S = _RuleShape
_SHAPES: dict[RuleId, _RuleShape] = {
    RuleId.AndL: _S("L", And),
    RuleId.AndR: _S("R", And),
    RuleId.OrL: _S("L", Or),
    RuleId.OrR: _S("R", Or),
    RuleId.NotL: _S("L", Not),
    RuleId.NotR: _S("R", Not),
    RuleId.ImpL: _S("L", Imp),
    RuleId.ImpR: _S("R", Imp),
    RuleId.ContrL: _S("L", None),
    RuleId.ContrR: _S("R", None),
    RuleId.AxiomId: _S(None, None, required=frozenset({"partner"})),
    RuleId.AxiomRefl: _S("R", None),
    RuleId.ExL: _S("L", Exists, optional=frozenset({"term"})),
    RuleId.ExR: _S("R", Exists, required=frozenset({"term"})),
    RuleId.AllL: _S("L", Forall, required=frozenset({"term"})),
    RuleId.AllR: _S("R", Forall, optional=frozenset({"term"})),
    RuleId.EqIntro: _S("L", None, required=frozenset({"term"})),
    RuleId.SubstL: _S("L", None, required=frozenset({"eq", "occ_path"})),
    RuleId.SubstR: _S("R", None, required=frozenset({"eq", "occ_path"})),
}

_FIELD_NAMES = {  # user-facing vocabulary (file format / API keys)
    "term": "term",
    "eq": "eq",
    "occ_path": "occPath",
    "partner": "partner",
}

_SIDE_WORD = {"L": "left", "R": "right"}


def _diag(rule: RuleId, detail: DetailCode, sel: Selection, **payload: str) -> Diagnostic:
    return Diagnostic(rule, detail, sel, dict(payload))


def _shape_check(rule: RuleId, sel: Selection) -> Diagnostic | None:
    shape = _SHAPES[rule]
    if sel.side is None:
        return _diag(rule, DetailCode.MISSING_SELECTION_FIELD, sel, field="side")
    if sel.index is None:
        return _diag(rule, DetailCode.MISSING_SELECTION_FIELD, sel, field="index")
    present = {
        name
        for name in ("term", "eq", "occ_path", "partner")
        if getattr(sel, name) is not None
    }
    missing = shape.required - present
    if missing:
        name = sorted(missing)[0]
        return _diag(
            rule, DetailCode.MISSING_SELECTION_FIELD, sel,
            field=_FIELD_NAMES[name],
        )
    extra = present - shape.required - shape.optional
    if extra:
        name = sorted(extra)[0]
        return _diag(
            rule, DetailCode.UNEXPECTED_SELECTION_FIELD, sel,
            field=_FIELD_NAMES[name],
        )
    return None


def _side_check(rule: RuleId, sel: Selection) -> Diagnostic | None:
    expected = _SHAPES[rule].side
    if expected is not None and sel.side != expected:
        return _diag(
            rule, DetailCode.WRONG_SIDE, sel,
            expected=_SIDE_WORD[expected], found=_SIDE_WORD[sel.side],
        )
    return None


def _index_check(rule: RuleId, s: Sequent, sel: Selection) -> Diagnostic | None:
    formulas = s.side(sel.side)
    # EqIntro inserts a new formula, so the index is an insertion position.
    upper = len(formulas) + 1 if rule is RuleId.EqIntro else len(formulas)
    if not 0 <= sel.index < upper:
        return _diag(
            rule, DetailCode.INDEX_OUT_OF_RANGE, sel,
            index=str(sel.index), found=_SIDE_WORD[sel.side],
        )
    return None


def _operator_check(rule: RuleId, principal: Formula, sel: Selection) -> Diagnostic | None:
    if sel.operator_path:
        try:
            node_at(principal, sel.operator_path)
        except PathError:
            return _diag(
                rule, DetailCode.INVALID_PATH, sel,
                span=str(list(sel.operator_path)),
            )
        text, spans = print_formula(principal)
        start, end = spans[sel.operator_path]
        return _diag(
            rule, DetailCode.NOT_TOP_LEVEL, sel,
            span=text[start:end], found=head_symbol(principal),
        )
    return None


_CONNECTIVE_NAME: dict[type, str] = {
    And: "&",
    Or: "|",
    Imp: "->",
    Not: "~",
    Forall: "forall",
    Exists: "exists",
}


def _connective_check(rule: RuleId, principal: Formula, sel: Selection) -> Diagnostic | None:
    expected = _SHAPES[rule].connective
    if expected is not None and not isinstance(principal, expected):
        return _diag(
            rule, DetailCode.WRONG_CONNECTIVE, sel,
            expected=_CONNECTIVE_NAME[expected],
            found=head_symbol(principal),
        )
    return None


def _occupied_names(s: Sequent) -> frozenset[str]:
    sig = signature_of(s)
    return frozenset(sig.preds) | frozenset(sig.funcs) | var_names(s)


def _skolem_constant(
    rule: RuleId, s: Sequent, sel: Selection, var: str
) -> Union[Func, Diagnostic]:
    """Validate a proposed Skolem constant, or generate a fresh one."""
    if sel.term is not None:
        t = sel.term
        if not (isinstance(t, Func) and not t.args):
            return _diag(
                rule, DetailCode.SKOLEM_NOT_CONSTANT, sel, term=print_term(t)
            )
        if t.name in _occupied_names(s):
            return _diag(rule, DetailCode.SKOLEM_NOT_FRESH, sel, symbol=t.name)
        return t
    name = fresh_constant(signature_of(s), var, avoid=var_names(s))
    return Func(name, ())


def _ground_check(rule: RuleId, s: Sequent, sel: Selection) -> Diagnostic | None:
    t = sel.term
    assert t is not None
    v = first_var(t)
    if v is not None:
        return _diag(
            rule, DetailCode.TERM_NOT_GROUND, sel, term=print_term(t), symbol=v
        )
    bad = first_unknown_symbol(t, signature_of(s))
    if bad is not None:
        return _diag(
            rule, DetailCode.SYMBOL_OUTSIDE_SIGNATURE, sel,
            term=print_term(t), symbol=bad,
        )
    return None


def _check_axiom(
    s: Sequent, rule: RuleId, sel: Selection
) -> Union[AxiomKind, Diagnostic]:
    if rule is RuleId.AxiomId:
        other = s.succedent if sel.side == "L" else s.antecedent
        assert sel.partner is not None
        if not 0 <= sel.partner < len(other):
            return _diag(
                rule, DetailCode.INDEX_OUT_OF_RANGE, sel, index=str(sel.partner),
                found=_SIDE_WORD["R" if sel.side == "L" else "L"],
            )
        mine = s.side(sel.side)[sel.index]
        if mine != other[sel.partner]:
            return _diag(
                rule, DetailCode.NO_MATCHING_PARTNER, sel,
                found=print_formula(mine)[0],
                expected=print_formula(other[sel.partner])[0],
            )
        return AxiomKind.Id
    # reflexivity
    goal = s.succedent[sel.index]
    if not isinstance(goal, Eq):
        return _diag(
            rule, DetailCode.GOAL_NOT_AN_EQUALITY, sel, found=print_formula(goal)[0]
        )
    if goal.lhs != goal.rhs:
        return _diag(
            rule, DetailCode.GOAL_NOT_REFLEXIVE, sel, found=print_formula(goal)[0]
        )
    return AxiomKind.Refl


def _subst_check(
    s: Sequent, rule: RuleId, sel: Selection
) -> Union[tuple[Eq, Formula], Diagnostic]:
    assert sel.eq is not None and sel.occ_path is not None
    if sel.eq.side != "L":
        return _diag(rule, DetailCode.EQ_NOT_IN_ANTECEDENT, sel)
    if not 0 <= sel.eq.index < len(s.antecedent):
        return _diag(
            rule, DetailCode.INDEX_OUT_OF_RANGE, sel,
            index=str(sel.eq.index), found=_SIDE_WORD["L"],
        )
    eq_formula = s.antecedent[sel.eq.index]
    if not isinstance(eq_formula, Eq):
        return _diag(
            rule, DetailCode.EQ_NOT_AN_EQUALITY, sel,
            found=print_formula(eq_formula)[0],
        )
    if sel.side == "L" and sel.eq.index == sel.index:
        return _diag(rule, DetailCode.EQ_IS_PRINCIPAL, sel)
    principal = s.side(sel.side)[sel.index]
    try:
        clicked = node_at(principal, sel.occ_path)
    except PathError:
        return _diag(rule, DetailCode.INVALID_PATH, sel, span=str(list(sel.occ_path)))
    if not isinstance(clicked, Term):
        return _diag(rule, DetailCode.INVALID_PATH, sel, span=str(list(sel.occ_path)))
    if clicked != eq_formula.lhs:
        return _diag(
            rule, DetailCode.TERM_MISMATCH, sel,
            found=print_term(clicked), expected=print_term(eq_formula.lhs),
        )
    rewritten = replace_at(principal, sel.occ_path, eq_formula.rhs)
    assert isinstance(rewritten, Formula)
    return eq_formula, rewritten


def _splice(formulas: tuple[Formula, ...], i: int, *repl: Formula) -> tuple[Formula, ...]:
    return formulas[:i] + repl + formulas[i + 1 :]


def _without(formulas: tuple[Formula, ...], i: int) -> tuple[Formula, ...]:
    return formulas[:i] + formulas[i + 1 :]


def apply_rule(
    s: Sequent, rule: RuleId, sel: Selection, *, strict: bool = False
) -> Union[list[Sequent], Diagnostic]:
    """Apply ``rule`` at ``sel``, yielding the premisses or a Diagnostic.

    Premisses come in the rule's left-to-right order; axioms yield the
    empty list.  With ``strict=True`` the substitution rules consume the
    chosen equality instead of keeping it available for further clicks.
    """
    d = _shape_check(rule, sel) or _side_check(rule, sel)
    if d:
        return d
    d = _index_check(rule, s, sel)
    if d:
        return d

    gamma, delta = s.antecedent, s.succedent
    i = sel.index
    assert i is not None

    if rule is RuleId.EqIntro:
        d = _ground_check(rule, s, sel)
        if d:
            return d
        assert sel.term is not None
        new_gamma = gamma[:i] + (Eq(sel.term, sel.term),) + gamma[i:]
        return [Sequent(new_gamma, delta)]

    principal = s.side(sel.side)[i]
    d = _operator_check(rule, principal, sel)
    if d:
        return d

    if rule in (RuleId.AxiomId, RuleId.AxiomRefl):
        res = _check_axiom(s, rule, sel)
        return res if isinstance(res, Diagnostic) else []

    if rule in (RuleId.SubstL, RuleId.SubstR):
        res = _subst_check(s, rule, sel)
        if isinstance(res, Diagnostic):
            return res
        eq_formula, rewritten = res
        assert sel.eq is not None
        if rule is RuleId.SubstL:
            new_gamma = _splice(gamma, i, rewritten)
            if strict:
                new_gamma = _without(new_gamma, sel.eq.index)
            return [Sequent(new_gamma, delta)]
        new_gamma = _without(gamma, sel.eq.index) if strict else gamma
        return [Sequent(new_gamma, _splice(delta, i, rewritten))]

    d = _connective_check(rule, principal, sel)
    if d:
        return d

    if rule is RuleId.AndL:
        assert isinstance(principal, And)
        return [Sequent(_splice(gamma, i, principal.left, principal.right), delta)]
    if rule is RuleId.AndR:
        assert isinstance(principal, And)
        return [
            Sequent(gamma, _splice(delta, i, principal.left)),
            Sequent(gamma, _splice(delta, i, principal.right)),
        ]
    if rule is RuleId.OrL:
        assert isinstance(principal, Or)
        return [
            Sequent(_splice(gamma, i, principal.left), delta),
            Sequent(_splice(gamma, i, principal.right), delta),
        ]
    if rule is RuleId.OrR:
        assert isinstance(principal, Or)
        return [Sequent(gamma, _splice(delta, i, principal.left, principal.right))]
    if rule is RuleId.NotL:
        assert isinstance(principal, Not)
        return [Sequent(_without(gamma, i), (principal.body,) + delta)]
    if rule is RuleId.NotR:
        assert isinstance(principal, Not)
        return [Sequent(gamma + (principal.body,), _without(delta, i))]
    if rule is RuleId.ImpL:
        assert isinstance(principal, Imp)
        return [
            Sequent(_splice(gamma, i, principal.right), delta),
            Sequent(_without(gamma, i), (principal.left,) + delta),
        ]
    if rule is RuleId.ImpR:
        assert isinstance(principal, Imp)
        return [Sequent(gamma + (principal.left,), _splice(delta, i, principal.right))]
    if rule is RuleId.ContrL:
        return [Sequent(_splice(gamma, i, principal, principal), delta)]
    if rule is RuleId.ContrR:
        return [Sequent(gamma, _splice(delta, i, principal, principal))]
    if rule is RuleId.ExL:
        assert isinstance(principal, Exists)
        c = _skolem_constant(rule, s, sel, principal.var)
        if isinstance(c, Diagnostic):
            return c
        return [Sequent(_splice(gamma, i, substitute(principal.body, principal.var, c)), delta)]
    if rule is RuleId.AllR:
        assert isinstance(principal, Forall)
        c = _skolem_constant(rule, s, sel, principal.var)
        if isinstance(c, Diagnostic):
            return c
        return [Sequent(gamma, _splice(delta, i, substitute(principal.body, principal.var, c)))]
    if rule is RuleId.AllL:
        assert isinstance(principal, Forall)
        d = _ground_check(rule, s, sel)
        if d:
            return d
        assert sel.term is not None
        return [Sequent(_splice(gamma, i, substitute(principal.body, principal.var, sel.term)), delta)]
    if rule is RuleId.ExR:
        assert isinstance(principal, Exists)
        d = _ground_check(rule, s, sel)
        if d:
            return d
        assert sel.term is not None
        return [Sequent(gamma, _splice(delta, i, substitute(principal.body, principal.var, sel.term)))]
    raise AssertionError(f"unhandled rule {rule}")


def detect_axiom(s: Sequent, sel: Selection) -> Union[AxiomKind, Diagnostic]:
    """Which axiom closes the selected formula, if any.

    A selection with a ``partner`` is checked as the identity axiom, one
    without as the reflexivity axiom on the succedent.
    """
    rule = RuleId.AxiomId if sel.partner is not None else RuleId.AxiomRefl
    d = _shape_check(rule, sel) or _side_check(rule, sel) or _index_check(rule, s, sel)
    if d:
        return d
    return _check_axiom(s, rule, sel)


_HEAD_RULES: dict[type, dict[str, tuple[RuleId, ...]]] = {
    And: {"L": (RuleId.AndL,), "R": (RuleId.AndR,)},
    Or: {"L": (RuleId.OrL,), "R": (RuleId.OrR,)},
    Imp: {"L": (RuleId.ImpL,), "R": (RuleId.ImpR,)},
    Not: {"L": (RuleId.NotL,), "R": (RuleId.NotR,)},
    Forall: {"L": (RuleId.AllL,), "R": (RuleId.AllR,)},
    Exists: {"L": (RuleId.ExL,), "R": (RuleId.ExR,)},
}


def applicable_rules(s: Sequent, side: str, index: int) -> frozenset[RuleId]:
    """All rules some well-formed selection at this formula would satisfy.

    Instantiation-dependent rules count as applicable when their shape
    conditions hold: AllL/ExR need some ground term to exist over the
    sequent's signature, SubstL/SubstR need an equality in the antecedent.
    EqIntro targets the sequent as a whole rather than a formula, so it is
    never part of a per-formula answer.
    """
    formulas = s.side(side)
    if not 0 <= index < len(formulas):
        raise IndexError(f"no formula {index} on side {side}")
    f = formulas[index]
    out = {RuleId.ContrL if side == "L" else RuleId.ContrR}

    per_head = _HEAD_RULES.get(type(f))
    if per_head is not None:
        candidates = per_head[side]
        sig = signature_of(s)
        has_ground_term = any(a == 0 for a in sig.funcs.values())
        for rule in candidates:
            if rule in (RuleId.AllL, RuleId.ExR) and not has_ground_term:
                continue
            out.add(rule)

    other = s.succedent if side == "L" else s.antecedent
    if any(g == f for g in other):
        out.add(RuleId.AxiomId)
    if side == "R" and isinstance(f, Eq) and f.lhs == f.rhs:
        out.add(RuleId.AxiomRefl)
    if any(isinstance(g, Eq) for g in s.antecedent):
        out.add(RuleId.SubstL if side == "L" else RuleId.SubstR)
    return frozenset(out)
