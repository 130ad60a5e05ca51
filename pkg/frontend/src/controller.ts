// Session controller: owns the UI state, feeds gestures through the
// selection machine, talks to the server, and turns rejections into
// banner state. Optimistic updates are deliberately absent: every
// gesture waits for the server's verdict, because the feedback is the
// point.

import { ApiError, type Api } from "./api.js";
import {
  findNode,
  formulaAt,
  type DiagnosticPayload,
  type SessionState,
  type Side,
} from "./model.js";
import {
  IDLE,
  chooseRule as machineChooseRule,
  clickFormula as machineClick,
  submitTerm as machineSubmitTerm,
  type Click,
  type Stage,
  type Step,
} from "./selection.js";
import { spanForPath } from "./spans.js";

export interface Highlight {
  nodeId: number;
  side: Side;
  index: number;
  start: number;
  end: number;
}

export interface Banner {
  kind: "error" | "info";
  message: string;
  category?: string;
  detail?: string;
  highlight?: Highlight;
}

export type Listener = (c: Controller) => void;

export class Controller {
  state: SessionState | null = null;
  stage: Stage = IDLE;
  banner: Banner | null = null;
  private listeners: Listener[] = [];
  private lastClick: Click | null = null;

  constructor(readonly api: Api) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this);
  }

  async newSession(sequent: string, locale?: string): Promise<void> {
    try {
      this.state = await this.api.createSession(sequent, locale);
      this.stage = IDLE;
      this.banner = null;
    } catch (err) {
      this.fail(err);
    }
    this.emit();
  }

  async loadFile(doc: unknown, locale?: string): Promise<void> {
    try {
      this.state = await this.api.createSessionFromFile(doc, locale);
      this.stage = IDLE;
      this.banner = null;
    } catch (err) {
      this.fail(err);
    }
    this.emit();
  }

  chooseRule(rule: string): void {
    this.stage = machineChooseRule(rule);
    this.banner = null;
    this.emit();
  }

  cancelGesture(): void {
    this.stage = IDLE;
    this.emit();
  }

  /** A click on a formula; `path` is the innermost span at the clicked character. */
  async clickOperator(nodeId: number, side: Side, index: number, path: number[]): Promise<void> {
    if (!this.state) return;
    const node = findNode(this.state.root, nodeId);
    if (!node) return;
    const click: Click = {
      nodeId,
      side,
      index,
      path,
      isEquality: formulaAt(node, side, index).isEquality,
    };
    this.lastClick = click;
    await this.step(machineClick(this.stage, click));
  }

  async submitTerm(text: string): Promise<void> {
    await this.step(machineSubmitTerm(this.stage, text));
  }

  async resetNode(nodeId: number): Promise<void> {
    if (!this.state) return;
    try {
      this.state = await this.api.resetNode(this.state.sessionId, nodeId, this.state.revision);
      this.stage = IDLE;
      this.banner = null;
    } catch (err) {
      await this.fail(err);
    }
    this.emit();
  }

  private async step(step: Step): Promise<void> {
    if (step.kind === "stay") {
      this.stage = step.stage;
      this.banner = step.error ? { kind: "error", message: step.error } : this.banner;
      this.emit();
      return;
    }
    if (!this.state) return;
    try {
      this.state = await this.api.apply(
        this.state.sessionId,
        step.nodeId,
        step.rule,
        step.selection,
        this.state.revision,
      );
      this.stage = IDLE;
      this.banner = null;
    } catch (err) {
      await this.fail(err);
    }
    this.emit();
  }

  private async fail(err: unknown): Promise<void> {
    if (err instanceof ApiError) {
      if (err.status === 409) {
        // someone else moved the proof: reload, then report
        if (this.state) {
          this.state = await this.api.getState(this.state.sessionId);
        }
        this.stage = IDLE;
        this.banner = { kind: "info", message: err.body.localizedMessage };
        return;
      }
      this.stage = IDLE;
      this.banner = {
        kind: "error",
        message: err.body.localizedMessage,
        category: err.body.diagnostic?.category,
        detail: err.body.diagnostic?.detail,
        highlight: this.diagnosticHighlight(err.body.diagnostic) ?? undefined,
      };
      return;
    }
    this.stage = IDLE;
    this.banner = { kind: "error", message: String(err) };
  }

  /** Character range of the offending operator, for the error banner. */
  private diagnosticHighlight(diagnostic?: DiagnosticPayload): Highlight | null {
    if (!diagnostic || !this.state || !this.lastClick) return null;
    const selection = diagnostic.selection;
    const path = selection.path ?? selection.occPath;
    if (!path || selection.side === undefined || selection.index === undefined) return null;
    const node = findNode(this.state.root, this.lastClick.nodeId);
    if (!node) return null;
    const formula = formulaAt(node, selection.side, selection.index);
    const span = spanForPath(formula.spans, path);
    if (!span) return null;
    return {
      nodeId: this.lastClick.nodeId,
      side: selection.side,
      index: selection.index,
      start: span.start,
      end: span.end,
    };
  }
}
