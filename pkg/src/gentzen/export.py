"""Proof tree export: stacked text derivations and an SVG twin.

Both exports share one layout: premisses sit above a horizontal rule
line, the rule name to its right, the conclusion centered beneath, in
the usual inference-figure style.  The SVG variant positions the same
lines on a monospace grid, which keeps the output deterministic and
lets tests reason about bounding boxes exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .printer import print_sequent
from .prooftree import ProofNode, ProofTree

_GAP = 3  # columns between sibling premiss blocks

CHAR_W = 8
LINE_H = 18
PAD = 10


@dataclass
class _Block:
    lines: list[str]
    width: int


def _pad_center(s: str, width: int) -> str:
    extra = width - len(s)
    left = extra // 2
    return " " * left + s + " " * (extra - left)


def _join_blocks(blocks: list[_Block]) -> _Block:
    if not blocks:
        return _Block([], 0)
    height = max(len(b.lines) for b in blocks)
    padded: list[list[str]] = []
    for b in blocks:
        filler = [" " * b.width] * (height - len(b.lines))
        padded.append(filler + [line.ljust(b.width) for line in b.lines])
    lines = [
        (" " * _GAP).join(p[row] for p in padded) for row in range(height)
    ]
    width = sum(b.width for b in blocks) + _GAP * (len(blocks) - 1)
    return _Block(lines, width)


def _block(node: ProofNode) -> _Block:
    conclusion = print_sequent(node.sequent)
    if node.rule is None:
        return _Block([conclusion], len(conclusion))
    top = _join_blocks([_block(c) for c in node.children])
    bar_w = max(top.width, len(conclusion))
    lines = [_pad_center(line, bar_w) for line in top.lines]
    lines.append("-" * bar_w + " " + node.rule.value)
    lines.append(_pad_center(conclusion, bar_w))
    width = bar_w + 1 + len(node.rule.value)
    return _Block(lines, width)


def export_text(tree: ProofTree) -> str:
    block = _block(tree.root)
    return "\n".join(line.rstrip() for line in block.lines) + "\n"


# ------------------------------------------------------------------ SVG


@dataclass(frozen=True)
class Box:
    """Pixel bounding box of one node's whole subtree."""

    node_id: int
    x: float
    y: float
    width: float
    height: float

    def overlaps(self, other: "Box") -> bool:
        return not (
            self.x + self.width <= other.x
            or other.x + other.width <= self.x
            or self.y + self.height <= other.y
            or other.y + other.height <= self.y
        )


@dataclass
class _SvgElems:
    texts: list[tuple[float, float, str, str]]  # x, y (baseline), content, fill
    rules: list[tuple[float, float, float, str]]  # x1, x2, y, label
    boxes: list[Box]


def _measure(node: ProofNode) -> float:
    own = len(print_sequent(node.sequent)) * CHAR_W
    if node.rule is None:
        return own
    kids = [_measure(c) for c in node.children]
    top = sum(kids) + _GAP * CHAR_W * max(0, len(kids) - 1)
    return max(own, top)


def _height(node: ProofNode) -> int:
    """Height in rows: one row per sequent plus one per rule line."""
    if node.rule is None:
        return 1
    inner = max((_height(c) for c in node.children), default=0)
    return inner + 2


def _place(node: ProofNode, x: float, y_bottom: float, out: _SvgElems) -> float:
    """Lay out the subtree with its bottom edge at ``y_bottom``; returns width."""
    width = _measure(node)
    text = print_sequent(node.sequent)
    text_w = len(text) * CHAR_W
    tx = x + (width - text_w) / 2
    baseline = y_bottom - LINE_H * 0.25
    fill = "#aa2222" if node.rule is None else "#000000"
    out.texts.append((tx, baseline, text, fill))
    if node.rule is not None:
        bar_y = y_bottom - LINE_H
        out.rules.append((x, x + width, bar_y, node.rule.value))
        if node.children:
            kids_w = [_measure(c) for c in node.children]
            total = sum(kids_w) + _GAP * CHAR_W * (len(kids_w) - 1)
            cx = x + (width - total) / 2
            for child, w in zip(node.children, kids_w):
                _place(child, cx, bar_y - LINE_H * 0.25, out)
                cx += w + _GAP * CHAR_W
    rows = _height(node)
    out.boxes.append(Box(node.id, x, y_bottom - rows * LINE_H - LINE_H * 0.25, width, rows * LINE_H))
    return width


def svg_layout(tree: ProofTree) -> _SvgElems:
    out = _SvgElems([], [], [])
    total_rows = _height(tree.root)
    _place(tree.root, PAD, PAD + total_rows * LINE_H, out)
    return out


def export_svg(tree: ProofTree) -> str:
    elems = svg_layout(tree)
    width = _measure(tree.root) + 2 * PAD + 12 * CHAR_W  # room for rule labels
    height = _height(tree.root) * LINE_H + 2 * PAD + LINE_H
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}" '
        f'font-family="monospace" font-size="13">',
    ]
    for x1, x2, y, label in elems.rules:
        parts.append(
            f'  <line x1="{x1:.1f}" y1="{y:.1f}" x2="{x2:.1f}" y2="{y:.1f}" '
            f'stroke="#000000" stroke-width="1"/>'
        )
        parts.append(
            f'  <text x="{x2 + 4:.1f}" y="{y + 4:.1f}" font-size="11" '
            f'fill="#555555">{escape(label)}</text>'
        )
    for x, y, content, fill in elems.texts:
        parts.append(
            f'  <text x="{x:.1f}" y="{y:.1f}" fill="{fill}" xml:space="preserve">'
            f"{escape(content)}</text>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
