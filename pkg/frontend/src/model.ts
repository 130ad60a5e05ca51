// Types mirroring the server's JSON. The client renders these verbatim;
// it never derives logical facts from formula text on its own.

export type Side = "L" | "R";

export interface Span {
  path: number[];
  start: number;
  end: number;
}

export interface FormulaView {
  text: string;
  spans: Span[];
  rules: string[];
  isEquality: boolean;
}

export interface SelectionPayload {
  side?: Side;
  index?: number;
  path?: number[];
  term?: string;
  eq?: { side: Side; index: number };
  occPath?: number[];
  partner?: number;
}

export interface NodeView {
  id: number;
  sequent: string;
  rule: string | null;
  selection: SelectionPayload | null;
  open: boolean;
  closed: boolean;
  antecedent: FormulaView[];
  succedent: FormulaView[];
  premisses: NodeView[];
}

export interface SessionState {
  sessionId: string;
  revision: number;
  locale: string;
  complete: boolean;
  openGoals: number[];
  root: NodeView;
}

export interface RuleView {
  id: string;
  premisses: string[];
  conclusion: string;
  info: string;
}

export interface DiagnosticPayload {
  rule: string;
  detail: string;
  category: string;
  payload: Record<string, string>;
  selection: SelectionPayload;
}

export interface ApiErrorBody {
  code: string;
  messageKey: string;
  localizedMessage: string;
  diagnostic?: DiagnosticPayload;
  [extra: string]: unknown;
}

export function findNode(root: NodeView, id: number): NodeView | null {
  if (root.id === id) return root;
  for (const child of root.premisses) {
    const hit = findNode(child, id);
    if (hit) return hit;
  }
  return null;
}

export function formulaAt(node: NodeView, side: Side, index: number): FormulaView {
  const list = side === "L" ? node.antecedent : node.succedent;
  const formula = list[index];
  if (!formula) throw new Error(`no formula ${side}/${index} at node ${node.id}`);
  return formula;
}
