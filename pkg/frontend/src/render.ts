// DOM rendering. Dumb by design: paints whatever the controller holds
// and forwards clicks; nothing here knows what a rule means.

import type { Controller, Highlight } from "./controller.js";
import type { FormulaView, NodeView, RuleView, Side } from "./model.js";
import { innermostAt } from "./spans.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderFormula(
  controller: Controller,
  nodeId: number,
  side: Side,
  index: number,
  formula: FormulaView,
  highlight: Highlight | null,
): HTMLElement {
  const wrap = el("span", "formula");
  wrap.title = `applicable: ${formula.rules.join(", ") || "none"}`;
  const chars: HTMLElement[] = [];
  for (let offset = 0; offset < formula.text.length; offset++) {
    const ch = el("span", "ch", formula.text[offset]);
    const active =
      highlight !== null &&
      highlight.nodeId === nodeId &&
      highlight.side === side &&
      highlight.index === index &&
      offset >= highlight.start &&
      offset < highlight.end;
    if (active) ch.classList.add("highlight");
    ch.addEventListener("mouseenter", () => {
      const span = innermostAt(formula.spans, offset);
      if (!span) return;
      chars.forEach((c, i) =>
        c.classList.toggle("scope", i >= span.start && i < span.end),
      );
    });
    ch.addEventListener("click", (event) => {
      event.stopPropagation();
      const span = innermostAt(formula.spans, offset);
      void controller.clickOperator(nodeId, side, index, span ? span.path : []);
    });
    chars.push(ch);
    wrap.appendChild(ch);
  }
  wrap.addEventListener("mouseleave", () => {
    chars.forEach((c) => c.classList.remove("scope"));
  });
  return wrap;
}

function renderSequent(controller: Controller, node: NodeView, highlight: Highlight | null): HTMLElement {
  const line = el("div", node.open ? "sequent open-goal" : "sequent");
  const addSide = (formulas: FormulaView[], side: Side) => {
    formulas.forEach((formula, index) => {
      if (index) line.appendChild(el("span", "sep", ", "));
      line.appendChild(renderFormula(controller, node.id, side, index, formula, highlight));
    });
  };
  addSide(node.antecedent, "L");
  line.appendChild(el("span", "turnstile", node.antecedent.length ? " ==> " : "==> "));
  addSide(node.succedent, "R");
  if (node.rule) {
    const chip = el("span", "rule-chip", node.rule);
    chip.title = "click to undo this step";
    chip.addEventListener("click", () => void controller.resetNode(node.id));
    line.appendChild(chip);
  }
  if (node.open) line.appendChild(el("span", "goal-mark", " ?"));
  return line;
}

function renderTree(controller: Controller, node: NodeView, highlight: Highlight | null): HTMLElement {
  const box = el("div", "node");
  if (node.premisses.length || node.closed) {
    const top = el("div", "premisses");
    for (const child of node.premisses) top.appendChild(renderTree(controller, child, highlight));
    box.appendChild(top);
    box.appendChild(el("div", "bar"));
  }
  box.appendChild(renderSequent(controller, node, highlight));
  return box;
}

export function render(controller: Controller, mount: HTMLElement, rules: RuleView[]): void {
  mount.replaceChildren();
  const state = controller.state;

  const palette = el("div", "palette");
  for (const rule of rules) {
    const button = el("button", "rule-button", rule.id);
    button.title = rule.info; // schema + explanation on mouse-over
    if (controller.stage.kind !== "idle" && "rule" in controller.stage && controller.stage.rule === rule.id) {
      button.classList.add("armed");
    }
    button.addEventListener("click", () => controller.chooseRule(rule.id));
    palette.appendChild(button);
  }
  mount.appendChild(palette);

  if (controller.banner) {
    const banner = el("div", `banner ${controller.banner.kind}`);
    if (controller.banner.category) {
      banner.appendChild(el("span", "category-badge", controller.banner.category));
    }
    banner.appendChild(el("span", "banner-text", controller.banner.message));
    mount.appendChild(banner);
  }

  const stageHint = describeStage(controller);
  if (stageHint) mount.appendChild(el("div", "stage-hint", stageHint));

  if (controller.stage.kind === "term-input") {
    const form = el("div", "term-form");
    const input = el("input") as HTMLInputElement;
    input.placeholder = controller.stage.termOptional
      ? "constant name (empty = pick one for me)"
      : "ground term, e.g. f(c)";
    const go = el("button", undefined, "apply");
    go.addEventListener("click", () => void controller.submitTerm(input.value));
    const dismiss = el("button", undefined, "cancel");
    dismiss.addEventListener("click", () => controller.cancelGesture());
    form.append(input, go, dismiss);
    mount.appendChild(form);
  }

  if (state) {
    const status = el(
      "div",
      "status",
      state.complete
        ? "proof complete"
        : `open goals: ${state.openGoals.length} (revision ${state.revision})`,
    );
    mount.appendChild(status);
    mount.appendChild(renderTree(controller, state.root, controller.banner?.highlight ?? null));
  }
}

function describeStage(controller: Controller): string | null {
  const stage = controller.stage;
  switch (stage.kind) {
    case "idle":
      return null;
    case "rule":
      return `${stage.rule}: click the operator of a sequent formula`;
    case "axiom-partner":
      return "AxiomId: click the identical formula on the other side";
    case "subst-eq":
      return `${stage.rule}: click an equality in the antecedent`;
    case "subst-occ":
      return `${stage.rule}: click the term occurrence to rewrite`;
    case "term-input":
      return `${stage.rule}: provide the term`;
  }
}
