#!/usr/bin/env python3
"""Build the shipped proof corpus.

Positive proofs are constructed step by step through the engine (so a
change in rule behaviour shows up as a build failure here), verified,
and written as proof files.  The mistake corpus encodes classic wrong
applications as hand-assembled files together with a manifest naming the
expected rejection for each.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from gentzen import (
    Diagnostic,
    apply_at,
    const,
    new_proof,
    parse_sequent,
    parse_term,
    save,
    verify,
)
from gentzen.rules import EqRef, RuleId as R, Selection as Sel

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"

GROUP1 = (
    "forall x exists y. x = v(y) & forall x. F(v(x)) ==> forall x. F(x)"
)
GROUP2 = (
    "forall x forall y. E(x,y) -> x = f(y)"
    " ==> forall x forall y forall z. E(x,z) & E(y,z) -> x = y"
)
GROUP3 = (
    "forall x forall z. P(x,c) & Q(z,g(x,z))"
    " ==> exists y forall x. P(x,y) & forall z exists u. Q(z,u)"
)


def build(sequent_text: str, steps: list[tuple[int, R, Sel]]):
    tree = new_proof(parse_sequent(sequent_text))
    for node_id, rule, sel in steps:
        result = apply_at(tree, node_id, rule, sel)
        if isinstance(result, Diagnostic):
            raise SystemExit(
                f"corpus step failed: node {node_id} {rule.value}: "
                f"{result.detail.value} {result.payload}"
            )
        tree = result
    report = verify(tree)
    if not report.verdict:
        raise SystemExit(f"corpus proof does not verify: {report.failures()}")
    return tree


def group1_tree():
    return build(
        GROUP1,
        [
            (0, R.AllR, Sel(side="R", index=0, term=const("a"))),
            (1, R.AllL, Sel(side="L", index=0, term=const("a"))),
            (2, R.ExL, Sel(side="L", index=0, term=const("b"))),
            (3, R.AndL, Sel(side="L", index=0)),
            (4, R.AllL, Sel(side="L", index=1, term=const("b"))),
            (5, R.SubstR, Sel(side="R", index=0, eq=EqRef("L", 0), occ_path=(0,))),
            (6, R.AxiomId, Sel(side="L", index=1, partner=0)),
        ],
    )


def group2_tree():
    return build(
        GROUP2,
        [
            (0, R.AllR, Sel(side="R", index=0, term=const("a"))),
            (1, R.AllR, Sel(side="R", index=0, term=const("b"))),
            (2, R.AllR, Sel(side="R", index=0, term=const("c"))),
            (3, R.ImpR, Sel(side="R", index=0)),
            (4, R.AndL, Sel(side="L", index=1)),
            # the key idea: duplicate the universal premiss, then
            # instantiate both copies differently
            (5, R.ContrL, Sel(side="L", index=0)),
            (6, R.AllL, Sel(side="L", index=0, term=const("a"))),
            (7, R.AllL, Sel(side="L", index=0, term=const("c"))),
            (8, R.AllL, Sel(side="L", index=1, term=const("b"))),
            (9, R.AllL, Sel(side="L", index=1, term=const("c"))),
            (10, R.ImpL, Sel(side="L", index=0)),
            (12, R.AxiomId, Sel(side="L", index=1, partner=0)),
            (11, R.ImpL, Sel(side="L", index=1)),
            (14, R.AxiomId, Sel(side="L", index=2, partner=0)),
            (13, R.SubstR, Sel(side="R", index=0, eq=EqRef("L", 0), occ_path=(0,))),
            (15, R.SubstR, Sel(side="R", index=0, eq=EqRef("L", 1), occ_path=(1,))),
            (16, R.AxiomRefl, Sel(side="R", index=0)),
        ],
    )


def group3_tree():
    t = parse_term
    return build(
        GROUP3,
        [
            (0, R.ExR, Sel(side="R", index=0, term=t("c"))),
            (1, R.AllR, Sel(side="R", index=0, term=const("a"))),
            (2, R.AndR, Sel(side="R", index=0)),
            (3, R.AllL, Sel(side="L", index=0, term=const("a"))),
            (5, R.AllL, Sel(side="L", index=0, term=const("a"))),
            (6, R.AndL, Sel(side="L", index=0)),
            (7, R.AxiomId, Sel(side="L", index=0, partner=0)),
            (4, R.AllR, Sel(side="R", index=0, term=const("b"))),
            (8, R.AllL, Sel(side="L", index=0, term=const("b"))),
            (9, R.AllL, Sel(side="L", index=0, term=const("b"))),
            (10, R.AndL, Sel(side="L", index=0)),
            (11, R.ExR, Sel(side="R", index=0, term=t("g(b,b)"))),
            (12, R.AxiomId, Sel(side="L", index=1, partner=0)),
        ],
    )


def node(sequent: str, rule: str | None = None, selection: dict | None = None,
         premisses: list | None = None) -> dict:
    return {
        "sequent": sequent,
        "rule": rule,
        "selection": selection,
        "premisses": premisses or [],
    }


MISTAKES: list[dict] = [
    {
        "file": "misplaced_subformula.json",
        "expectedCategory": "Misplaced",
        "expectedDetail": "NOT_TOP_LEVEL",
        "description": "conjunction rule aimed at the & inside a quantified antecedent formula",
        "doc": node(
            GROUP1,
            "AndL",
            {"side": "L", "index": 0, "path": [0, 0]},
            [node("forall x exists y. x = v(y), forall x. F(v(x)) ==> forall x. F(x)")],
        ),
    },
    {
        "file": "confused_and_or.json",
        "expectedCategory": "Confused",
        "expectedDetail": "WRONG_CONNECTIVE",
        "description": "conjunction rule applied to a disjunction",
        "doc": node(
            "P | Q ==> R",
            "AndL",
            {"side": "L", "index": 0},
            [node("P, Q ==> R")],
        ),
    },
    {
        "file": "skolem_not_fresh.json",
        "expectedCategory": "WrongFOInstantiation",
        "expectedDetail": "SKOLEM_NOT_FRESH",
        "description": "existential elimination with a constant that already occurs",
        "doc": node(
            "exists x. P(x) ==> P(c)",
            "ExL",
            {"side": "L", "index": 0, "term": "c"},
            [node("P(c) ==> P(c)")],
        ),
    },
    {
        "file": "nonground_instantiation.json",
        "expectedCategory": "WrongFOInstantiation",
        "expectedDetail": "SYMBOL_OUTSIDE_SIGNATURE",
        "description": "universal instantiation with a name from outside the sequent (a variable, read as an unknown constant)",
        "doc": node(
            "forall x. P(x) ==> P(c)",
            "AllL",
            {"side": "L", "index": 0, "term": "y"},
            [node("P(y) ==> P(c)")],
        ),
    },
    {
        "file": "gamma_delta_selection.json",
        "expectedCategory": "WrongRuleInstantiation",
        "expectedDetail": "UNEXPECTED_SELECTION_FIELD",
        "description": "rule applied with ingredients it does not take",
        "doc": node(
            "==> P & Q",
            "AndR",
            {"side": "R", "index": 0, "term": "a"},
            [node("==> P"), node("==> Q")],
        ),
    },
    {
        "file": "missing_instantiation.json",
        "expectedCategory": "WrongRuleInstantiation",
        "expectedDetail": "MISSING_SELECTION_FIELD",
        "description": "universal instantiation without a term",
        "doc": node(
            "forall x. P(x) ==> Q",
            "AllL",
            {"side": "L", "index": 0},
            [node("P(a) ==> Q")],
        ),
    },
    {
        "file": "fig6_precedence.json",
        "expectedCategory": "Misplaced",
        "expectedDetail": "NOT_TOP_LEVEL",
        "description": "precedence misreading: conjunction split although the quantifier prefix is outermost",
        "doc": node(
            GROUP3,
            "AndR",
            {"side": "R", "index": 0, "path": [0, 0]},
            [
                node("forall x forall z. P(x,c) & Q(z,g(x,z)) ==> exists y forall x. P(x,y)"),
                node("forall x forall z. P(x,c) & Q(z,g(x,z)) ==> forall z exists u. Q(z,u)"),
            ],
        ),
    },
    {
        "file": "wrong_side.json",
        "expectedCategory": "Confused",
        "expectedDetail": "WRONG_SIDE",
        "description": "right-negation rule pointed at an antecedent formula",
        "doc": node(
            "~P ==> Q",
            "NotR",
            {"side": "L", "index": 0},
            [node("P ==> Q")],
        ),
    },
    {
        "file": "axiom_no_partner.json",
        "expectedCategory": "NotApplicable",
        "expectedDetail": "NO_MATCHING_PARTNER",
        "description": "identity axiom claimed for two different formulas",
        "doc": node(
            "P ==> Q",
            "AxiomId",
            {"side": "L", "index": 0, "partner": 0},
        ),
    },
    {
        "file": "subst_wrong_occurrence.json",
        "expectedCategory": "WrongFOInstantiation",
        "expectedDetail": "TERM_MISMATCH",
        "description": "substitution clicked on the right-hand side of the equality (rewriting runs left to right only)",
        "doc": node(
            "a = b ==> f(b) = c",
            "SubstR",
            {"side": "R", "index": 0, "eq": {"side": "L", "index": 0}, "occPath": [0, 0]},
            [node("a = b ==> f(a) = c")],
        ),
    },
]


def main() -> int:
    proofs_dir = CORPUS / "proofs"
    mistakes_dir = CORPUS / "mistakes"
    sequents_dir = CORPUS / "sequents"
    for d in (proofs_dir, mistakes_dir, sequents_dir):
        d.mkdir(parents=True, exist_ok=True)

    for name, builder in (
        ("group1", group1_tree),
        ("group2", group2_tree),
        ("group3", group3_tree),
    ):
        tree = builder()
        (proofs_dir / f"{name}.json").write_bytes(save(tree))
        print(f"wrote proofs/{name}.json ({sum(1 for _ in tree.nodes())} nodes)")

    manifest = []
    for entry in MISTAKES:
        doc = {"version": 1, "root": entry["doc"]}
        (mistakes_dir / entry["file"]).write_text(
            json.dumps(doc, ensure_ascii=False, indent=2) + "\n", "utf-8"
        )
        manifest.append(
            {k: entry[k] for k in ("file", "expectedCategory", "expectedDetail", "description")}
        )
        print(f"wrote mistakes/{entry['file']}")
    (mistakes_dir / "manifest.json").write_text(
        json.dumps(manifest, ensure_ascii=False, indent=2) + "\n", "utf-8"
    )

    (sequents_dir / "exam_sequents.txt").write_text(
        "# one sequent per line; '#' starts a comment\n"
        f"{GROUP1}\n"
        f"{GROUP2}\n"
        f"{GROUP3}\n"
        "forall x forall y. E(x,y) -> x = f(y), E(a,c), E(b,c) ==> a = b\n",
        "utf-8",
    )
    print("wrote sequents/exam_sequents.txt")
    return 0


if __name__ == "__main__":
    sys.exit(main())
