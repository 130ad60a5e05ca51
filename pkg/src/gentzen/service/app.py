"""HTTP/JSON session API: the front door the browser UI drives.

One round-trip per user gesture: state responses carry the rendered
text, span map and applicable rules for every formula, so clients never
re-parse or re-implement any rule logic.  Errors use a structured body
``{code, messageKey, localizedMessage, diagnostic?}``.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .. import i18n
from ..parser import ParseError, parse_sequent
from ..printer import print_formula, print_sequent
from ..prooftree import (
    ProofNode,
    SchemaError,
    UnknownNodeError,
    apply_at,
    is_complete,
    new_proof,
    open_goals,
    reset_node,
    selection_to_json,
    tree_from_document,
    tree_to_document,
    verify,
)
from ..rules import Diagnostic, RuleId, RULE_SCHEMAS, applicable_rules
from ..export import export_svg, export_text
from ..syntax import Eq
from .schemas import (
    ApplyRequest,
    CreateSessionRequest,
    FormulaView,
    NodeView,
    ResetNodeRequest,
    RuleView,
    SelectionModel,
    SessionSummary,
    SessionView,
    SpanModel,
)
from .store import Session, SessionStore


class ApiError(Exception):
    def __init__(self, status: int, code: str, message_key: str,
                 context: dict | None = None, diagnostic: Diagnostic | None = None,
                 locale: str = "en"):
        self.status = status
        self.code = code
        self.message_key = message_key
        self.context = context or {}
        self.diagnostic = diagnostic
        self.locale = locale


def _error_body(err: ApiError) -> dict:
    if err.diagnostic is not None:
        localized = i18n.message_for(err.diagnostic, err.locale)
    else:
        localized = i18n.render(err.message_key, err.context, err.locale)
    body = {
        "code": err.code,
        "messageKey": err.message_key,
        "localizedMessage": localized,
    }
    body.update(err.context)
    if err.diagnostic is not None:
        d = err.diagnostic
        body["diagnostic"] = {
            "rule": d.rule.value,
            "detail": d.detail.value,
            "category": d.category.value,
            "payload": dict(d.payload),
            "selection": selection_to_json(d.selection),
        }
    return body


def _formula_view(s, side: str, index: int, f) -> FormulaView:
    text, spans = print_formula(f)
    span_models = [
        SpanModel(path=list(p), start=a, end=b)
        for p, (a, b) in sorted(spans.items())
    ]
    rules = sorted(r.value for r in applicable_rules(s, side, index))
    # display metadata so clients never inspect formulas themselves
    return FormulaView(
        text=text, spans=span_models, rules=rules, isEquality=isinstance(f, Eq)
    )


def _node_view(node: ProofNode) -> NodeView:
    s = node.sequent
    return NodeView(
        id=node.id,
        sequent=print_sequent(s),
        rule=node.rule.value if node.rule else None,
        selection=SelectionModel.from_selection(node.selection) if node.selection else None,
        open=node.is_open(),
        closed=node.is_closed_leaf(),
        antecedent=[_formula_view(s, "L", i, f) for i, f in enumerate(s.antecedent)],
        succedent=[_formula_view(s, "R", i, f) for i, f in enumerate(s.succedent)],
        premisses=[_node_view(c) for c in node.children],
    )


def _session_view(session: Session) -> SessionView:
    return SessionView(
        sessionId=session.session_id,
        revision=session.revision,
        locale=session.locale,
        complete=is_complete(session.tree),
        openGoals=open_goals(session.tree),
        root=_node_view(session.tree.root),
    )


def create_app(data_dir: str | Path | None = None,
               default_locale: str | None = None) -> FastAPI:
    locale_default = default_locale or os.environ.get(i18n.LOCALE_ENV_VAR, "en")
    store = SessionStore(Path(data_dir) if data_dir else None, locale_default)
    app = FastAPI(title="gentzen", version="0.1.0")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(ApiError)
    async def _api_error(_request: Request, err: ApiError):
        return JSONResponse(status_code=err.status, content=_error_body(err))

    def _get_session(session_id: str, locale: str | None) -> Session:
        try:
            return store.get(session_id)
        except KeyError:
            raise ApiError(
                404, "unknown_session", "service.unknown_session",
                {"id": session_id}, locale=locale or locale_default,
            ) from None

    def _check_revision(session: Session, revision: int, locale: str) -> None:
        if revision != session.revision:
            raise ApiError(
                409, "revision_conflict", "service.revision_conflict",
                {"expected": str(revision), "found": str(session.revision)},
                locale=locale,
            )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.get("/sessions")
    def list_sessions() -> list[SessionSummary]:
        return [
            SessionSummary(
                sessionId=s.session_id,
                revision=s.revision,
                locale=s.locale,
                complete=is_complete(s.tree),
                rootSequent=print_sequent(s.tree.root.sequent),
            )
            for s in sorted(store.all(), key=lambda s: s.created)
        ]

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest) -> SessionView:
        locale = req.locale or locale_default
        if (req.sequent is None) == (req.proofFile is None):
            raise ApiError(
                400, "bad_request", "service.bad_request",
                {"message": "provide exactly one of 'sequent' or 'proofFile'"},
                locale=locale,
            )
        if req.sequent is not None:
            try:
                tree = new_proof(parse_sequent(req.sequent))
            except ParseError as e:
                raise ApiError(
                    400, "parse_error", "service.parse_error",
                    {"offset": str(e.offset), "message": e.message},
                    locale=locale,
                ) from e
        else:
            try:
                tree = tree_from_document(req.proofFile)
            except SchemaError as e:
                raise ApiError(
                    400, "schema_error", "service.schema_error",
                    {"path": e.path, "message": e.message}, locale=locale,
                ) from e
        session = store.create(tree, locale)
        return _session_view(session)

    @app.get("/sessions/{session_id}")
    def get_session(session_id: str, locale: str | None = Query(default=None)) -> SessionView:
        return _session_view(_get_session(session_id, locale))

    @app.post("/sessions/{session_id}/apply")
    def apply_step(session_id: str, req: ApplyRequest,
                   locale: str | None = Query(default=None)) -> SessionView:
        session = _get_session(session_id, locale)
        loc = locale or session.locale
        try:
            rule = RuleId(req.rule)
        except ValueError:
            raise ApiError(
                400, "bad_request", "service.bad_request",
                {"message": f"unknown rule {req.rule!r}"}, locale=loc,
            ) from None
        try:
            selection = req.selection.to_selection()
        except ParseError as e:
            raise ApiError(
                400, "parse_error", "service.parse_error",
                {"offset": str(e.offset), "message": e.message}, locale=loc,
            ) from e
        with session.lock:
            _check_revision(session, req.revision, loc)
            try:
                result = apply_at(session.tree, req.nodeId, rule, selection)
            except UnknownNodeError:
                raise ApiError(
                    404, "unknown_node", "service.unknown_node",
                    {"id": str(req.nodeId)}, locale=loc,
                ) from None
            if isinstance(result, Diagnostic):
                raise ApiError(
                    422, "rule_rejected", result.detail.value,
                    diagnostic=result, locale=loc,
                )
            store.commit(session, result)
            return _session_view(session)

    @app.post("/sessions/{session_id}/reset-node")
    def reset(session_id: str, req: ResetNodeRequest,
              locale: str | None = Query(default=None)) -> SessionView:
        session = _get_session(session_id, locale)
        loc = locale or session.locale
        with session.lock:
            _check_revision(session, req.revision, loc)
            try:
                tree = reset_node(session.tree, req.nodeId)
            except UnknownNodeError:
                raise ApiError(
                    404, "unknown_node", "service.unknown_node",
                    {"id": str(req.nodeId)}, locale=loc,
                ) from None
            store.commit(session, tree)
            return _session_view(session)

    @app.get("/sessions/{session_id}/verify")
    def verify_session(session_id: str, locale: str | None = Query(default=None)) -> dict:
        session = _get_session(session_id, locale)
        loc = locale or session.locale
        report = verify(session.tree)
        return {
            "verdict": report.verdict,
            "complete": report.complete,
            "checks": [
                {
                    "nodeId": c.node_id,
                    "ok": c.ok,
                    "problem": c.problem,
                    "category": c.diagnostic.category.value if c.diagnostic else None,
                    "message": i18n.message_for(c.diagnostic, loc) if c.diagnostic else None,
                }
                for c in report.checks
            ],
        }

    @app.get("/sessions/{session_id}/file")
    def get_file(session_id: str, locale: str | None = Query(default=None)):
        session = _get_session(session_id, locale)
        return JSONResponse(content=tree_to_document(session.tree))

    @app.put("/sessions/{session_id}/file")
    def put_file(session_id: str, document: dict,
                 revision: int | None = Query(default=None),
                 locale: str | None = Query(default=None)) -> SessionView:
        session = _get_session(session_id, locale)
        loc = locale or session.locale
        with session.lock:
            if revision is not None:
                _check_revision(session, revision, loc)
            try:
                tree = tree_from_document(document)
            except SchemaError as e:
                raise ApiError(
                    400, "schema_error", "service.schema_error",
                    {"path": e.path, "message": e.message}, locale=loc,
                ) from e
            store.commit(session, tree)
            return _session_view(session)

    @app.get("/sessions/{session_id}/export")
    def export_session(session_id: str, format: str = Query(default="text"),
                       locale: str | None = Query(default=None)):
        session = _get_session(session_id, locale)
        loc = locale or session.locale
        if format == "text":
            return Response(export_text(session.tree), media_type="text/plain; charset=utf-8")
        if format == "svg":
            return Response(export_svg(session.tree), media_type="image/svg+xml")
        raise ApiError(
            400, "bad_request", "service.bad_request",
            {"message": f"unknown export format {format!r}"}, locale=loc,
        )

    @app.get("/rules")
    def list_rules(locale: str | None = Query(default=None)) -> list[RuleView]:
        loc = locale or locale_default
        return [_rule_view(r, loc) for r in RuleId]

    @app.get("/rules/{rule_id}")
    def get_rule(rule_id: str, locale: str | None = Query(default=None)) -> RuleView:
        loc = locale or locale_default
        try:
            rule = RuleId(rule_id)
        except ValueError:
            raise ApiError(
                404, "bad_request", "service.bad_request",
                {"message": f"unknown rule {rule_id!r}"}, locale=loc,
            ) from None
        return _rule_view(rule, loc)

    def _rule_view(rule: RuleId, locale: str) -> RuleView:
        schema = RULE_SCHEMAS[rule]
        return RuleView(
            id=rule.value,
            premisses=list(schema.premisses),
            conclusion=schema.conclusion,
            info=i18n.rule_info(rule, locale),
        )

    return app
