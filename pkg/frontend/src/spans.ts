// Span arithmetic for operator-scope highlighting. The server's span map
// assigns every syntax node the character range of its full scope; the
// innermost range around a clicked character identifies the clicked node.

import type { Span } from "./model.js";

export function spanForPath(spans: Span[], path: number[]): Span | null {
  const key = path.join(",");
  for (const span of spans) {
    if (span.path.join(",") === key) return span;
  }
  return null;
}

/** The innermost node whose scope covers the character at `offset`. */
export function innermostAt(spans: Span[], offset: number): Span | null {
  let best: Span | null = null;
  for (const span of spans) {
    if (span.start <= offset && offset < span.end) {
      if (best === null || span.end - span.start < best.end - best.start) {
        best = span;
      }
    }
  }
  return best;
}

/** Character range to highlight when the node at `path` is selected. */
export function highlightRange(
  spans: Span[],
  path: number[],
): { start: number; end: number } | null {
  const span = spanForPath(spans, path);
  return span ? { start: span.start, end: span.end } : null;
}
