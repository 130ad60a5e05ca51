"""Proof trees: construction state, replay verification, file format.

A tree is immutable; ``apply_at`` returns a new tree and leaves the old
one untouched (in particular, a rejected application changes nothing).
Node ids are monotonically fresh so references held by a UI survive the
undo of unrelated branches.

The file format (version 1) stores each node as rendered sequent text, a
rule name and the selection; ``verify`` replays every recorded step
through the rule engine, so a hand-edited file is rejected no matter how
plausible it looks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Iterator, Union

from .parser import ParseError, parse_sequent, parse_term
from .printer import print_sequent
from .rules import (
    AxiomKind,
    Diagnostic,
    EqRef,
    RuleId,
    Selection,
    apply_rule,
    detect_axiom,
)
from .syntax import Sequent

FORMAT_VERSION = 1

_AXIOMS = (RuleId.AxiomId, RuleId.AxiomRefl)


class UnknownNodeError(KeyError):
    """A node id that does not exist in this tree."""


class SchemaError(ValueError):
    """A proof file that violates the format, with the offending path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


@dataclass(frozen=True)
class ProofNode:
    # ids are bookkeeping for the UI and excluded from structural equality
    id: int = field(compare=False)
    sequent: Sequent
    rule: RuleId | None = None
    selection: Selection | None = None
    children: tuple["ProofNode", ...] = ()

    def is_open(self) -> bool:
        return self.rule is None

    def is_closed_leaf(self) -> bool:
        return self.rule in _AXIOMS


@dataclass(frozen=True)
class ProofTree:
    root: ProofNode
    next_id: int

    def nodes(self) -> Iterator[ProofNode]:
        stack = [self.root]
        while stack:
            n = stack.pop()
            yield n
            stack.extend(reversed(n.children))

    def node(self, node_id: int) -> ProofNode:
        for n in self.nodes():
            if n.id == node_id:
                return n
        raise UnknownNodeError(node_id)

    def __eq__(self, other: object) -> bool:
        # trees compare structurally; ids are bookkeeping
        return isinstance(other, ProofTree) and self.root == other.root


def new_proof(s: Sequent) -> ProofTree:
    return ProofTree(ProofNode(0, s), next_id=1)


def _swap(node: ProofNode, node_id: int, new: ProofNode) -> ProofNode | None:
    if node.id == node_id:
        return new
    for k, child in enumerate(node.children):
        swapped = _swap(child, node_id, new)
        if swapped is not None:
            kids = node.children[:k] + (swapped,) + node.children[k + 1 :]
            return replace(node, children=kids)
    return None


def apply_at(
    tree: ProofTree, node_id: int, rule: RuleId, sel: Selection, *, strict: bool = False
) -> Union[ProofTree, Diagnostic]:
    """Apply a rule at a node; any existing subtree there is discarded first.

    This is also the undo gesture: re-applying (a different rule) at an
    interior node prunes everything above it.  On a Diagnostic the tree is
    returned unchanged by simply not being replaced.
    """
    node = tree.node(node_id)
    result = apply_rule(node.sequent, rule, sel, strict=strict)
    if isinstance(result, Diagnostic):
        return result
    base = tree.next_id
    kids = tuple(
        ProofNode(base + k, premiss) for k, premiss in enumerate(result)
    )
    new_node = replace(node, rule=rule, selection=sel, children=kids)
    new_root = _swap(tree.root, node_id, new_node)
    assert new_root is not None
    return ProofTree(new_root, base + len(kids))


def reset_node(tree: ProofTree, node_id: int) -> ProofTree:
    """Make the node an open goal again, discarding its subtree."""
    node = tree.node(node_id)
    new_root = _swap(tree.root, node_id, replace(node, rule=None, selection=None, children=()))
    assert new_root is not None
    return ProofTree(new_root, tree.next_id)


def open_goals(tree: ProofTree) -> list[int]:
    return [n.id for n in tree.nodes() if n.is_open()]


def is_complete(tree: ProofTree) -> bool:
    return not open_goals(tree)


@dataclass(frozen=True)
class NodeCheck:
    node_id: int
    ok: bool
    diagnostic: Diagnostic | None = None
    problem: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[NodeCheck, ...]
    complete: bool
    verdict: bool

    def failures(self) -> list[NodeCheck]:
        return [c for c in self.checks if not c.ok]


def verify(tree: ProofTree) -> VerificationReport:
    """Replay every node through the rule engine, trusting nothing.

    The verdict is true iff the tree is complete and every recorded step
    reproduces exactly the recorded premisses.
    """
    checks: list[NodeCheck] = []
    for node in tree.nodes():
        if node.rule is None:
            if node.children:
                checks.append(
                    NodeCheck(node.id, False, problem="open goal must not have premisses")
                )
            continue
        if node.selection is None:
            checks.append(
                NodeCheck(node.id, False, problem=f"rule {node.rule.value} without a selection")
            )
            continue
        if node.rule in _AXIOMS:
            res = detect_axiom(node.sequent, node.selection)
            if isinstance(res, Diagnostic):
                checks.append(NodeCheck(node.id, False, diagnostic=res))
            elif (res is AxiomKind.Id) != (node.rule is RuleId.AxiomId):
                checks.append(
                    NodeCheck(node.id, False, problem=f"selection matches the other axiom, not {node.rule.value}")
                )
            elif node.children:
                checks.append(
                    NodeCheck(node.id, False, problem="axiom must not have premisses")
                )
            else:
                checks.append(NodeCheck(node.id, True))
            continue
        result = apply_rule(node.sequent, node.rule, node.selection)
        if isinstance(result, Diagnostic):
            checks.append(NodeCheck(node.id, False, diagnostic=result))
            continue
        recorded = [c.sequent for c in node.children]
        if recorded != result:
            checks.append(
                NodeCheck(
                    node.id, False,
                    problem="recorded premisses differ from the rule's premisses",
                )
            )
            continue
        checks.append(NodeCheck(node.id, True))
    complete = is_complete(tree)
    all_ok = all(c.ok for c in checks)
    return VerificationReport(tuple(checks), complete, complete and all_ok)


# ------------------------------------------------------------ file format


def selection_to_json(sel: Selection) -> dict:
    out: dict = {}
    if sel.side is not None:
        out["side"] = sel.side
    if sel.index is not None:
        out["index"] = sel.index
    if sel.operator_path is not None:
        out["path"] = list(sel.operator_path)
    if sel.term is not None:
        from .printer import print_term

        out["term"] = print_term(sel.term)
    if sel.eq is not None:
        out["eq"] = {"side": sel.eq.side, "index": sel.eq.index}
    if sel.occ_path is not None:
        out["occPath"] = list(sel.occ_path)
    if sel.partner is not None:
        out["partner"] = sel.partner
    return out


def _expect_type(value, types, path: str, what: str):
    if not isinstance(value, types) or isinstance(value, bool):
        raise SchemaError(path, f"{what} expected")
    return value


def _int_list(value, path: str) -> tuple[int, ...]:
    if not isinstance(value, list) or any(
        not isinstance(k, int) or isinstance(k, bool) for k in value
    ):
        raise SchemaError(path, "list of integers expected")
    return tuple(value)


def selection_from_json(data: dict, path: str) -> Selection:
    if not isinstance(data, dict):
        raise SchemaError(path, "object expected")
    known = {"side", "index", "path", "term", "eq", "occPath", "partner"}
    for key in data:
        if key not in known:
            raise SchemaError(f"{path}.{key}", "unknown selection field")
    side = data.get("side")
    if side is not None and side not in ("L", "R"):
        raise SchemaError(f"{path}.side", "'L' or 'R' expected")
    index = data.get("index")
    if index is not None:
        _expect_type(index, int, f"{path}.index", "integer")
    op_path = data.get("path")
    operator_path = _int_list(op_path, f"{path}.path") if op_path is not None else None
    term = None
    if data.get("term") is not None:
        text = _expect_type(data["term"], str, f"{path}.term", "string")
        try:
            term = parse_term(text)
        except ParseError as e:
            raise SchemaError(f"{path}.term", f"unparseable term: {e}") from e
    eq = None
    if data.get("eq") is not None:
        eq_obj = _expect_type(data["eq"], dict, f"{path}.eq", "object")
        eq_side = eq_obj.get("side")
        if eq_side not in ("L", "R"):
            raise SchemaError(f"{path}.eq.side", "'L' or 'R' expected")
        eq_index = _expect_type(eq_obj.get("index"), int, f"{path}.eq.index", "integer")
        eq = EqRef(eq_side, eq_index)
    occ = data.get("occPath")
    occ_path = _int_list(occ, f"{path}.occPath") if occ is not None else None
    partner = data.get("partner")
    if partner is not None:
        _expect_type(partner, int, f"{path}.partner", "integer")
    return Selection(
        side=side,
        index=index,
        operator_path=operator_path,
        term=term,
        eq=eq,
        occ_path=occ_path,
        partner=partner,
    )


def _node_to_json(node: ProofNode) -> dict:
    return {
        "sequent": print_sequent(node.sequent),
        "rule": node.rule.value if node.rule is not None else None,
        "selection": selection_to_json(node.selection) if node.selection is not None else None,
        "premisses": [_node_to_json(c) for c in node.children],
    }


def tree_to_document(tree: ProofTree) -> dict:
    return {"version": FORMAT_VERSION, "root": _node_to_json(tree.root)}


def save(tree: ProofTree) -> bytes:
    return json.dumps(tree_to_document(tree), ensure_ascii=False, indent=2).encode("utf-8")


def _node_from_json(data, path: str, counter: list[int]) -> ProofNode:
    if not isinstance(data, dict):
        raise SchemaError(path, "object expected")
    if "sequent" not in data:
        raise SchemaError(f"{path}.sequent", "missing")
    text = _expect_type(data["sequent"], str, f"{path}.sequent", "string")
    try:
        sequent = parse_sequent(text)
    except ParseError as e:
        raise SchemaError(f"{path}.sequent", f"unparseable sequent: {e}") from e
    rule_name = data.get("rule")
    rule = None
    if rule_name is not None:
        _expect_type(rule_name, str, f"{path}.rule", "string")
        try:
            rule = RuleId(rule_name)
        except ValueError:
            raise SchemaError(f"{path}.rule", f"unknown rule {rule_name!r}") from None
    selection = None
    if data.get("selection") is not None:
        selection = selection_from_json(data["selection"], f"{path}.selection")
    premisses = data.get("premisses", [])
    if not isinstance(premisses, list):
        raise SchemaError(f"{path}.premisses", "list expected")
    node_id = counter[0]
    counter[0] += 1
    children = tuple(
        _node_from_json(p, f"{path}.premisses[{k}]", counter)
        for k, p in enumerate(premisses)
    )
    if rule is None and children:
        raise SchemaError(f"{path}.premisses", "open goal must not have premisses")
    if rule in _AXIOMS and children:
        raise SchemaError(f"{path}.premisses", "axiom must not have premisses")
    return ProofNode(node_id, sequent, rule, selection, children)


def tree_from_document(doc, path: str = "$") -> ProofTree:
    if not isinstance(doc, dict):
        raise SchemaError(path, "object expected")
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"{path}.version", f"unsupported version {version!r}")
    if "root" not in doc:
        raise SchemaError(f"{path}.root", "missing")
    counter = [0]
    root = _node_from_json(doc["root"], f"{path}.root", counter)
    return ProofTree(root, counter[0])


def load(data: Union[bytes, str]) -> ProofTree:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise SchemaError("$", f"not UTF-8: {e}") from e
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise SchemaError("$", f"invalid JSON: {e}") from e
    return tree_from_document(doc)
