"""Pydantic request/response models for the session API.

Field names follow the proof-file vocabulary (side/index/path/term/eq/
occPath/partner) so the wire format, the file format and the engine all
speak one language.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from ..parser import parse_term
from ..rules import EqRef, Selection


class EqRefModel(BaseModel):
    side: Literal["L", "R"]
    index: int


class SelectionModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    side: Optional[Literal["L", "R"]] = None
    index: Optional[int] = None
    path: Optional[list[int]] = None
    term: Optional[str] = None
    eq: Optional[EqRefModel] = None
    occPath: Optional[list[int]] = None
    partner: Optional[int] = None

    def to_selection(self) -> Selection:
        term = None
        if self.term is not None:
            term = parse_term(self.term)  # ParseError handled by the endpoint
        return Selection(
            side=self.side,
            index=self.index,
            operator_path=tuple(self.path) if self.path is not None else None,
            term=term,
            eq=EqRef(self.eq.side, self.eq.index) if self.eq is not None else None,
            occ_path=tuple(self.occPath) if self.occPath is not None else None,
            partner=self.partner,
        )

    @staticmethod
    def from_selection(sel: Selection) -> "SelectionModel":
        from ..printer import print_term

        return SelectionModel(
            side=sel.side,
            index=sel.index,
            path=list(sel.operator_path) if sel.operator_path is not None else None,
            term=print_term(sel.term) if sel.term is not None else None,
            eq=EqRefModel(side=sel.eq.side, index=sel.eq.index) if sel.eq else None,
            occPath=list(sel.occ_path) if sel.occ_path is not None else None,
            partner=sel.partner,
        )


class CreateSessionRequest(BaseModel):
    sequent: Optional[str] = None
    proofFile: Optional[dict] = None
    locale: Optional[str] = None


class ApplyRequest(BaseModel):
    nodeId: int
    rule: str
    selection: SelectionModel
    revision: int


class ResetNodeRequest(BaseModel):
    nodeId: int
    revision: int


class SpanModel(BaseModel):
    path: list[int]
    start: int
    end: int


class FormulaView(BaseModel):
    text: str
    spans: list[SpanModel]
    rules: list[str]
    isEquality: bool


class NodeView(BaseModel):
    id: int
    sequent: str
    rule: Optional[str]
    selection: Optional[SelectionModel]
    open: bool
    closed: bool
    antecedent: list[FormulaView]
    succedent: list[FormulaView]
    premisses: list["NodeView"]


class SessionView(BaseModel):
    sessionId: str
    revision: int
    locale: str
    complete: bool
    openGoals: list[int]
    root: NodeView


class SessionSummary(BaseModel):
    sessionId: str
    revision: int
    locale: str
    complete: bool
    rootSequent: str


class RuleView(BaseModel):
    id: str
    premisses: list[str]
    conclusion: str
    info: str


NodeView.model_rebuild()
