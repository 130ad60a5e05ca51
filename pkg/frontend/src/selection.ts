// The gesture state machine. A rule application is a short sequence of
// clicks; this module only sequences them and assembles the selection
// payload. Whether the finished application is legal is always the
// server's call: the machine gates on selection *shape* (which clicks a
// rule's selection needs) plus server-provided display flags, never on
// formula structure it derived itself.

import type { SelectionPayload, Side } from "./model.js";

// Workflow shapes per rule: which extra ingredients the selection carries.
const TERM_REQUIRED = new Set(["AllL", "ExR", "EqIntro"]);
const TERM_OPTIONAL = new Set(["ExL", "AllR"]); // optional Skolem-name proposal
const SUBSTITUTION = new Set(["SubstL", "SubstR"]);
const NEEDS_PARTNER = new Set(["AxiomId"]);

export type Stage =
  | { kind: "idle" }
  | { kind: "rule"; rule: string }
  | {
      kind: "term-input";
      rule: string;
      nodeId: number;
      side: Side;
      index: number;
      path?: number[];
      termOptional: boolean;
    }
  | { kind: "axiom-partner"; nodeId: number; side: Side; index: number }
  | { kind: "subst-eq"; rule: string }
  | { kind: "subst-occ"; rule: string; nodeId: number; eqIndex: number };

export interface Click {
  nodeId: number;
  side: Side;
  index: number;
  path: number[];
  isEquality: boolean;
}

export type Step =
  | { kind: "stay"; stage: Stage; error?: string }
  | { kind: "submit"; nodeId: number; rule: string; selection: SelectionPayload };

export const IDLE: Stage = { kind: "idle" };

export function chooseRule(rule: string): Stage {
  if (SUBSTITUTION.has(rule)) return { kind: "subst-eq", rule };
  return { kind: "rule", rule };
}

export function clickFormula(stage: Stage, click: Click): Step {
  switch (stage.kind) {
    case "idle":
      return { kind: "stay", stage, error: "choose a rule first" };

    case "rule": {
      const rule = stage.rule;
      if (NEEDS_PARTNER.has(rule)) {
        return {
          kind: "stay",
          stage: { kind: "axiom-partner", nodeId: click.nodeId, side: click.side, index: click.index },
        };
      }
      if (TERM_REQUIRED.has(rule) || TERM_OPTIONAL.has(rule)) {
        return {
          kind: "stay",
          stage: {
            kind: "term-input",
            rule,
            nodeId: click.nodeId,
            side: click.side,
            index: click.index,
            path: rule === "EqIntro" ? undefined : click.path,
            termOptional: TERM_OPTIONAL.has(rule),
          },
        };
      }
      return {
        kind: "submit",
        nodeId: click.nodeId,
        rule,
        selection: { side: click.side, index: click.index, path: click.path },
      };
    }

    case "axiom-partner": {
      if (click.nodeId !== stage.nodeId) {
        return { kind: "stay", stage, error: "finish the gesture on the same sequent" };
      }
      if (click.side === stage.side) {
        return { kind: "stay", stage, error: "select the partner on the other side" };
      }
      return {
        kind: "submit",
        nodeId: stage.nodeId,
        rule: "AxiomId",
        selection: { side: stage.side, index: stage.index, partner: click.index },
      };
    }

    case "subst-eq": {
      if (click.side !== "L") {
        return { kind: "stay", stage, error: "pick an equality from the antecedent" };
      }
      if (!click.isEquality) {
        return { kind: "stay", stage, error: "that formula is not an equality" };
      }
      return {
        kind: "stay",
        stage: { kind: "subst-occ", rule: stage.rule, nodeId: click.nodeId, eqIndex: click.index },
      };
    }

    case "subst-occ": {
      if (click.nodeId !== stage.nodeId) {
        return { kind: "stay", stage, error: "finish the gesture on the same sequent" };
      }
      const wantSide: Side = stage.rule === "SubstL" ? "L" : "R";
      if (click.side !== wantSide) {
        return {
          kind: "stay",
          stage,
          error: `click the occurrence to rewrite on the ${wantSide === "L" ? "left" : "right"} side`,
        };
      }
      return {
        kind: "submit",
        nodeId: stage.nodeId,
        rule: stage.rule,
        selection: {
          side: wantSide,
          index: click.index,
          occPath: click.path,
          eq: { side: "L", index: stage.eqIndex },
        },
      };
    }

    case "term-input":
      return { kind: "stay", stage, error: "enter the term first (or cancel)" };
  }
}

export function submitTerm(stage: Stage, text: string): Step {
  if (stage.kind !== "term-input") {
    return { kind: "stay", stage, error: "no term expected now" };
  }
  const trimmed = text.trim();
  if (!trimmed && !stage.termOptional) {
    return { kind: "stay", stage, error: "this rule needs a term" };
  }
  const selection: SelectionPayload = { side: stage.side, index: stage.index };
  if (stage.path !== undefined) selection.path = stage.path;
  if (trimmed) selection.term = trimmed;
  return { kind: "submit", nodeId: stage.nodeId, rule: stage.rule, selection };
}

export function cancel(): Stage {
  return IDLE;
}
