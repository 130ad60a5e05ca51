// Thin typed client for the session API. Every method is one endpoint;
// non-2xx responses surface as ApiError with the server's structured body.

import type {
  ApiErrorBody,
  RuleView,
  SelectionPayload,
  SessionState,
} from "./model.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ApiErrorBody,
  ) {
    super(body.localizedMessage || body.code);
  }
}

export interface Api {
  createSession(sequent: string, locale?: string): Promise<SessionState>;
  createSessionFromFile(doc: unknown, locale?: string): Promise<SessionState>;
  getState(sessionId: string): Promise<SessionState>;
  apply(
    sessionId: string,
    nodeId: number,
    rule: string,
    selection: SelectionPayload,
    revision: number,
  ): Promise<SessionState>;
  resetNode(sessionId: string, nodeId: number, revision: number): Promise<SessionState>;
  rules(locale?: string): Promise<RuleView[]>;
  getFile(sessionId: string): Promise<unknown>;
  putFile(sessionId: string, doc: unknown, revision: number): Promise<SessionState>;
  verify(sessionId: string): Promise<{ verdict: boolean; complete: boolean }>;
  exportUrl(sessionId: string, format: "text" | "svg"): string;
}

export class HttpApi implements Api {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = (await response.json()) as T;
    if (!response.ok) {
      throw new ApiError(response.status, data as ApiErrorBody);
    }
    return data;
  }

  createSession(sequent: string, locale?: string): Promise<SessionState> {
    return this.request("POST", "/sessions", locale ? { sequent, locale } : { sequent });
  }

  createSessionFromFile(doc: unknown, locale?: string): Promise<SessionState> {
    const body: Record<string, unknown> = { proofFile: doc };
    if (locale) body.locale = locale;
    return this.request("POST", "/sessions", body);
  }

  getState(sessionId: string): Promise<SessionState> {
    return this.request("GET", `/sessions/${sessionId}`);
  }

  apply(
    sessionId: string,
    nodeId: number,
    rule: string,
    selection: SelectionPayload,
    revision: number,
  ): Promise<SessionState> {
    return this.request("POST", `/sessions/${sessionId}/apply`, {
      nodeId,
      rule,
      selection,
      revision,
    });
  }

  resetNode(sessionId: string, nodeId: number, revision: number): Promise<SessionState> {
    return this.request("POST", `/sessions/${sessionId}/reset-node`, { nodeId, revision });
  }

  rules(locale?: string): Promise<RuleView[]> {
    return this.request("GET", locale ? `/rules?locale=${locale}` : "/rules");
  }

  getFile(sessionId: string): Promise<unknown> {
    return this.request("GET", `/sessions/${sessionId}/file`);
  }

  putFile(sessionId: string, doc: unknown, revision: number): Promise<SessionState> {
    return this.request("PUT", `/sessions/${sessionId}/file?revision=${revision}`, doc);
  }

  verify(sessionId: string): Promise<{ verdict: boolean; complete: boolean }> {
    return this.request("GET", `/sessions/${sessionId}/verify`);
  }

  exportUrl(sessionId: string, format: "text" | "svg"): string {
    return `${this.baseUrl}/sessions/${sessionId}/export?format=${format}`;
  }
}
