import assert from "node:assert/strict";
import { test } from "node:test";

import {
  IDLE,
  chooseRule,
  clickFormula,
  submitTerm,
  type Click,
  type Stage,
  type Step,
} from "../src/selection.js";

function click(partial: Partial<Click>): Click {
  return { nodeId: 0, side: "L", index: 0, path: [], isEquality: false, ...partial };
}

function stay(step: Step): { stage: Stage; error?: string } {
  assert.equal(step.kind, "stay");
  if (step.kind !== "stay") throw new Error("unreachable");
  return step;
}

test("clicking before choosing a rule is rejected", () => {
  const step = stay(clickFormula(IDLE, click({})));
  assert.match(step.error ?? "", /choose a rule/);
});

test("plain rule submits side, index and clicked path", () => {
  const step = clickFormula(chooseRule("AndR"), click({ side: "R", index: 1, path: [] }));
  assert.deepEqual(step, {
    kind: "submit",
    nodeId: 0,
    rule: "AndR",
    selection: { side: "R", index: 1, path: [] },
  });
});

test("instantiation rule goes through the term stage", () => {
  const step = stay(clickFormula(chooseRule("AllL"), click({ side: "L", index: 0 })));
  assert.equal(step.stage.kind, "term-input");
  const submit = submitTerm(step.stage, "f(c)");
  assert.deepEqual(submit, {
    kind: "submit",
    nodeId: 0,
    rule: "AllL",
    selection: { side: "L", index: 0, path: [], term: "f(c)" },
  });
});

test("empty term rejected when the rule requires one", () => {
  const step = stay(clickFormula(chooseRule("ExR"), click({ side: "R", index: 0 })));
  const blocked = stay(submitTerm(step.stage, "   "));
  assert.match(blocked.error ?? "", /needs a term/);
});

test("empty term allowed as Skolem generation request", () => {
  const step = stay(clickFormula(chooseRule("ExL"), click({ side: "L", index: 0 })));
  const submit = submitTerm(step.stage, "");
  assert.equal(submit.kind, "submit");
  if (submit.kind !== "submit") throw new Error("unreachable");
  assert.deepEqual(submit.selection, { side: "L", index: 0, path: [] });
});

test("identity axiom needs a partner on the other side", () => {
  const first = stay(clickFormula(chooseRule("AxiomId"), click({ side: "L", index: 1 })));
  const sameSide = stay(clickFormula(first.stage, click({ side: "L", index: 0 })));
  assert.match(sameSide.error ?? "", /other side/);
  const done = clickFormula(first.stage, click({ side: "R", index: 2 }));
  assert.deepEqual(done, {
    kind: "submit",
    nodeId: 0,
    rule: "AxiomId",
    selection: { side: "L", index: 1, partner: 2 },
  });
});

test("substitution: non-equality at stage two leaves the stage unchanged", () => {
  const stage = chooseRule("SubstR");
  assert.equal(stage.kind, "subst-eq");
  const step = stay(clickFormula(stage, click({ side: "L", index: 0, isEquality: false })));
  assert.deepEqual(step.stage, stage);
  assert.match(step.error ?? "", /not an equality/);
});

test("substitution: full three-stage flow", () => {
  const second = stay(
    clickFormula(chooseRule("SubstR"), click({ side: "L", index: 1, isEquality: true })),
  );
  assert.equal(second.stage.kind, "subst-occ");
  const wrongSide = stay(clickFormula(second.stage, click({ side: "L", index: 0, path: [0] })));
  assert.match(wrongSide.error ?? "", /right side/);
  const done = clickFormula(second.stage, click({ side: "R", index: 0, path: [0] }));
  assert.deepEqual(done, {
    kind: "submit",
    nodeId: 0,
    rule: "SubstR",
    selection: { side: "R", index: 0, occPath: [0], eq: { side: "L", index: 1 } },
  });
});

test("gesture must stay on one sequent", () => {
  const first = stay(
    clickFormula(chooseRule("AxiomId"), click({ nodeId: 3, side: "L", index: 0 })),
  );
  const other = stay(clickFormula(first.stage, click({ nodeId: 4, side: "R", index: 0 })));
  assert.match(other.error ?? "", /same sequent/);
});

test("stray term submission is rejected", () => {
  const step = submitTerm(IDLE, "c");
  assert.equal(step.kind, "stay");
});
