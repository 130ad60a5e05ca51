import json

import pytest
from fastapi.testclient import TestClient

from gentzen.prooftree import load, tree_to_document, verify
from gentzen.service import create_app

S0 = (
    "forall x forall y. E(x,y) -> x = f(y)"
    " ==> forall x forall y forall z. E(x,z) & E(y,z) -> x = y"
)


@pytest.fixture()
def client(tmp_path):
    app = create_app(data_dir=tmp_path / "sessions")
    with TestClient(app) as c:
        c.data_dir = tmp_path / "sessions"
        yield c


def create_session(client, sequent=S0, locale=None):
    body = {"sequent": sequent}
    if locale:
        body["locale"] = locale
    resp = client.post("/sessions", json=body)
    assert resp.status_code == 201, resp.text
    return resp.json()


class TestSessions:
    def test_create_returns_state(self, client):
        state = create_session(client)
        assert state["revision"] == 0
        assert state["openGoals"] == [0]
        assert state["root"]["sequent"] == S0
        assert not state["complete"]
        # per-formula rendering with spans and applicable rules
        succ = state["root"]["succedent"][0]
        assert succ["rules"] == ["AllR", "ContrR"]
        assert any(s["path"] == [] for s in succ["spans"])
        assert succ["isEquality"] is False

    def test_equality_flag_in_views(self, client):
        state = create_session(client, "a = b ==> P(a)")
        assert state["root"]["antecedent"][0]["isEquality"] is True
        assert state["root"]["succedent"][0]["isEquality"] is False

    def test_create_requires_exactly_one_source(self, client):
        assert client.post("/sessions", json={}).status_code == 400
        both = {"sequent": "==> P", "proofFile": {"version": 1}}
        assert client.post("/sessions", json=both).status_code == 400

    def test_parse_error_body(self, client):
        resp = client.post("/sessions", json={"sequent": "P & ==> Q"})
        assert resp.status_code == 400
        body = resp.json()
        assert body["code"] == "parse_error"
        assert body["offset"] == "4"
        assert body["localizedMessage"]

    def test_reads_are_stateless(self, client):
        sid = create_session(client)["sessionId"]
        a = client.get(f"/sessions/{sid}").json()
        b = client.get(f"/sessions/{sid}").json()
        assert a == b

    def test_unknown_session_404(self, client):
        resp = client.get("/sessions/doesnotexist")
        assert resp.status_code == 404
        assert resp.json()["code"] == "unknown_session"


class TestApply:
    def test_successful_step(self, client):
        state = create_session(client, "==> P & Q")
        resp = client.post(
            f"/sessions/{state['sessionId']}/apply",
            json={
                "nodeId": 0,
                "rule": "AndR",
                "selection": {"side": "R", "index": 0},
                "revision": 0,
            },
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["revision"] == 1
        assert [p["sequent"] for p in body["root"]["premisses"]] == ["==> P", "==> Q"]

    def test_rejected_step_is_422_with_diagnostic(self, client):
        state = create_session(client, "==> P | Q")
        resp = client.post(
            f"/sessions/{state['sessionId']}/apply",
            json={
                "nodeId": 0,
                "rule": "AndR",
                "selection": {"side": "R", "index": 0},
                "revision": 0,
            },
        )
        assert resp.status_code == 422
        body = resp.json()
        assert body["code"] == "rule_rejected"
        assert body["diagnostic"]["category"] == "Confused"
        assert body["diagnostic"]["detail"] == "WRONG_CONNECTIVE"
        assert body["messageKey"] == "WRONG_CONNECTIVE"
        assert body["localizedMessage"].startswith("Confused rule")
        # tree unchanged
        after = client.get(f"/sessions/{state['sessionId']}").json()
        assert after["revision"] == 0
        assert after["root"]["premisses"] == []

    def test_revision_conflict_409(self, client):
        state = create_session(client, "==> P & Q")
        ok = {
            "nodeId": 0,
            "rule": "AndR",
            "selection": {"side": "R", "index": 0},
            "revision": 0,
        }
        assert client.post(f"/sessions/{state['sessionId']}/apply", json=ok).status_code == 200
        stale = dict(ok, rule="ContrR")
        resp = client.post(f"/sessions/{state['sessionId']}/apply", json=stale)
        assert resp.status_code == 409
        assert resp.json()["code"] == "revision_conflict"

    def test_unknown_node_404(self, client):
        state = create_session(client, "==> P & Q")
        resp = client.post(
            f"/sessions/{state['sessionId']}/apply",
            json={
                "nodeId": 99,
                "rule": "AndR",
                "selection": {"side": "R", "index": 0},
                "revision": 0,
            },
        )
        assert resp.status_code == 404

    def test_reset_node_reopens(self, client):
        state = create_session(client, "==> P & Q")
        sid = state["sessionId"]
        client.post(
            f"/sessions/{sid}/apply",
            json={"nodeId": 0, "rule": "AndR", "selection": {"side": "R", "index": 0}, "revision": 0},
        )
        resp = client.post(f"/sessions/{sid}/reset-node", json={"nodeId": 0, "revision": 1})
        assert resp.status_code == 200
        assert resp.json()["openGoals"] == [0]


class TestPersistence:
    def test_crash_safety_file_matches_state(self, client):
        state = create_session(client, "==> P & Q")
        sid = state["sessionId"]
        client.post(
            f"/sessions/{sid}/apply",
            json={"nodeId": 0, "rule": "AndR", "selection": {"side": "R", "index": 0}, "revision": 0},
        )
        on_disk = load((client.data_dir / f"{sid}.json").read_bytes())
        via_api = client.get(f"/sessions/{sid}/file").json()
        assert tree_to_document(on_disk) == via_api

    def test_restart_rehydrates_sessions(self, client, tmp_path):
        sid = create_session(client, "==> P & Q")["sessionId"]
        client.post(
            f"/sessions/{sid}/apply",
            json={"nodeId": 0, "rule": "AndR", "selection": {"side": "R", "index": 0}, "revision": 0},
        )
        reborn = TestClient(create_app(data_dir=client.data_dir))
        state = reborn.get(f"/sessions/{sid}").json()
        assert [p["sequent"] for p in state["root"]["premisses"]] == ["==> P", "==> Q"]

    def test_file_upload_replaces_tree(self, client, proof_files):
        sid = create_session(client, "==> P")["sessionId"]
        doc = json.loads(proof_files[0].read_text("utf-8"))
        resp = client.put(f"/sessions/{sid}/file?revision=0", json=doc)
        assert resp.status_code == 200
        assert resp.json()["complete"]

    def test_file_upload_schema_error(self, client):
        sid = create_session(client, "==> P")["sessionId"]
        resp = client.put(f"/sessions/{sid}/file", json={"version": 7})
        assert resp.status_code == 400
        assert resp.json()["code"] == "schema_error"


class TestRules:
    def test_list_rules(self, client):
        body = client.get("/rules").json()
        assert len(body) == 19
        assert {r["id"] for r in body} >= {"AndL", "SubstR", "EqIntro"}

    def test_rule_info_localized(self, client):
        en = client.get("/rules/AllR").json()
        de = client.get("/rules/AllR?locale=de").json()
        assert "Γ ==> φ[c/x], Δ" in en["info"]
        assert "Skolem" in de["info"]
        assert en["info"] != de["info"]

    def test_unknown_rule_404(self, client):
        assert client.get("/rules/Cut").status_code == 404


class TestVerifyAndExport:
    def test_api_verify_agrees_with_cli(self, client, proof_files, corpus_dir, mistake_manifest):
        from click.testing import CliRunner

        from gentzen.cli import main

        paths = list(proof_files) + [
            corpus_dir / "mistakes" / e["file"] for e in mistake_manifest
        ]
        for path in paths:
            doc = json.loads(path.read_text("utf-8"))
            sid = client.post("/sessions", json={"proofFile": doc}).json()["sessionId"]
            api = client.get(f"/sessions/{sid}/verify").json()
            cli = CliRunner().invoke(main, ["verify", str(path)])
            assert api["verdict"] == (cli.exit_code == 0), path.name

    def test_export_endpoints(self, client, proof_files):
        doc = json.loads(proof_files[0].read_text("utf-8"))
        sid = client.post("/sessions", json={"proofFile": doc}).json()["sessionId"]
        text = client.get(f"/sessions/{sid}/export?format=text")
        assert text.status_code == 200 and "==>" in text.text
        svg = client.get(f"/sessions/{sid}/export?format=svg")
        assert svg.status_code == 200
        assert svg.headers["content-type"].startswith("image/svg+xml")
        assert client.get(f"/sessions/{sid}/export?format=png").status_code == 400
