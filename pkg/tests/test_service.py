"""HTTP facade: endpoints, status codes, byte determinism."""

from __future__ import annotations

import json
import os

import pytest

from conftest import GOLDEN_DIR, check_snapshot_invariants


def golden(name: str) -> dict:
    with open(os.path.join(GOLDEN_DIR, name), encoding="utf-8") as fh:
        return json.load(fh)


class TestExpandEndpoint:
    @pytest.mark.parametrize(
        ("q", "golden_file"),
        [
            ("AI", "expand_ai.json"),
            ("Data mining", "expand_data_mining.json"),
            ("Data integration", "expand_data_integration.json"),
            ("Knowledge reasoning", "expand_knowledge_reasoning.json"),
        ],
    )
    def test_case_study_golden(self, client, q, golden_file):
        response = client.get("/api/expand", params={"q": q})
        assert response.status_code == 200
        assert response.json() == golden(golden_file)

    def test_empty_query_is_400(self, client):
        assert client.get("/api/expand", params={"q": ""}).status_code == 400
        assert client.get("/api/expand").status_code == 400

    def test_miss_is_200_not_found_kind(self, client):
        response = client.get("/api/expand", params={"q": "no such term"})
        assert response.status_code == 200
        assert response.json()["kind"] == "not_found"

    def test_repeated_gets_byte_identical_with_etag(self, client):
        first = client.get("/api/expand", params={"q": "AI"})
        second = client.get("/api/expand", params={"q": "AI"})
        assert first.content == second.content
        assert first.headers["etag"] == second.headers["etag"]


class TestResolveEndpoint:
    def test_resolve_full_term(self, client):
        response = client.get("/api/resolve", params={"choice": "Artificial Intelligence"})
        assert response.status_code == 200
        assert response.json()["kind"] == "concept"

    def test_resolve_never_expansions(self, client):
        response = client.get("/api/resolve", params={"choice": "AI"})
        assert response.json()["kind"] != "expansions"

    def test_resolve_outside_taxonomy(self, client):
        response = client.get("/api/resolve", params={"choice": "Ab Itinio"})
        assert response.status_code == 200
        body = response.json()
        assert body["kind"] == "not_found"
        assert body["query"] == "Ab Itinio"

    def test_empty_choice_is_400(self, client):
        assert client.get("/api/resolve").status_code == 400


class TestSessionLifecycle:
    def test_create_by_label(self, client):
        response = client.post("/api/session", json={"q": "Data mining", "mode": "radial"})
        assert response.status_code == 200
        body = response.json()
        assert body["session_id"]
        assert body["snapshot"]["focus"] == "data-mining"
        assert body["layout"]["mode"] == "radial"
        check_snapshot_invariants(body["snapshot"])
        # every node placed
        node_ids = {n["id"] for n in body["snapshot"]["nodes"]}
        assert set(body["layout"]["positions"]) == node_ids

    def test_create_by_concept_id_bypasses_expansions(self, client):
        response = client.post("/api/session", json={"concept_id": "ai", "mode": "radial"})
        assert response.status_code == 200
        assert response.json()["snapshot"]["focus"] == "ai"

    def test_create_with_abbreviation_is_409(self, client):
        response = client.post("/api/session", json={"q": "AI", "mode": "radial"})
        assert response.status_code == 409

    def test_create_unknown_query_is_404(self, client):
        assert client.post("/api/session", json={"q": "no such term"}).status_code == 404
        assert client.post("/api/session", json={"concept_id": "ghost"}).status_code == 404

    def test_create_without_selector_is_400(self, client):
        assert client.post("/api/session", json={}).status_code == 400

    def test_create_with_bad_mode_is_409(self, client):
        response = client.post("/api/session", json={"q": "Data mining", "mode": "spiral"})
        assert response.status_code == 409

    def test_get_snapshot_replay_identical_bytes(self, client):
        created = client.post("/api/session", json={"q": "Data mining"}).json()
        sid = created["session_id"]
        first = client.get(f"/api/session/{sid}")
        second = client.get(f"/api/session/{sid}")
        assert first.content == second.content
        assert first.headers["etag"] == second.headers["etag"]

    def test_get_unknown_session_is_404(self, client):
        assert client.get("/api/session/nope").status_code == 404


class TestEvents:
    def make_session(self, client, q="Data mining", mode="radial"):
        return client.post("/api/session", json={"q": q, "mode": mode}).json()

    def find(self, snapshot, label):
        return next(n for n in snapshot["nodes"] if n["label"] == label)

    def test_click_fresh_gains_children(self, client):
        body = self.make_session(client)
        sid = body["session_id"]
        target = self.find(body["snapshot"], "Classification")
        before = len(body["snapshot"]["nodes"])
        response = client.post(
            f"/api/session/{sid}/event", json={"type": "click", "node": target["id"]}
        )
        assert response.status_code == 200
        after = response.json()["snapshot"]
        assert len(after["nodes"]) > before
        assert self.find(after, "Classification")["state"] == "expanded"
        check_snapshot_invariants(after)

    def test_more_event_requires_more_node(self, client):
        body = self.make_session(client, q="Machine learning")
        sid = body["session_id"]
        concept = self.find(body["snapshot"], "Deep learning")
        response = client.post(
            f"/api/session/{sid}/event", json={"type": "more", "node": concept["id"]}
        )
        assert response.status_code == 409

    def test_dblclick_recenters(self, client):
        body = self.make_session(client)
        sid = body["session_id"]
        target = self.find(body["snapshot"], "Classification")
        response = client.post(
            f"/api/session/{sid}/event", json={"type": "dblclick", "node": target["id"]}
        )
        assert response.status_code == 200
        after = response.json()["snapshot"]
        assert after["focus"] == "classification"
        assert after["session_id"] == sid

    def test_dblclick_more_node_is_409(self, client):
        body = client.post("/api/session", json={"concept_id": "ai", "mode": "radial"}).json()
        sid = body["session_id"]
        more = next(n for n in body["snapshot"]["nodes"] if n["kind"] == "more")
        response = client.post(
            f"/api/session/{sid}/event", json={"type": "dblclick", "node": more["id"]}
        )
        assert response.status_code == 409

    def test_set_mode_then_pin_flow(self, client):
        body = self.make_session(client)
        sid = body["session_id"]
        target = self.find(body["snapshot"], "Classification")

        # pin before force mode: rejected
        response = client.post(
            f"/api/session/{sid}/event",
            json={"type": "pin", "node": target["id"], "point": {"x": 10, "y": 20}},
        )
        assert response.status_code == 409

        response = client.post(
            f"/api/session/{sid}/event", json={"type": "set_mode", "mode": "force"}
        )
        assert response.status_code == 200
        assert response.json()["layout"]["mode"] == "force"

        response = client.post(
            f"/api/session/{sid}/event",
            json={"type": "pin", "node": target["id"], "point": {"x": 10, "y": 20}},
        )
        assert response.status_code == 200
        body2 = response.json()
        assert body2["snapshot"]["pinned"][target["id"]] == {"x": 10.0, "y": 20.0}
        assert body2["layout"]["positions"][target["id"]] == {"x": 10.0, "y": 20.0}

        response = client.post(
            f"/api/session/{sid}/event", json={"type": "unpin", "node": target["id"]}
        )
        assert response.status_code == 200
        assert response.json()["snapshot"]["pinned"] == {}

    def test_unknown_session_is_404(self, client):
        response = client.post(
            "/api/session/ghost/event", json={"type": "click", "node": "n0"}
        )
        assert response.status_code == 404

    def test_unknown_node_is_409(self, client):
        body = self.make_session(client)
        response = client.post(
            f"/api/session/{body['session_id']}/event",
            json={"type": "click", "node": "n999"},
        )
        assert response.status_code == 409

    def test_malformed_event_is_400(self, client):
        sid = self.make_session(client)["session_id"]
        assert (
            client.post(f"/api/session/{sid}/event", json={"type": "click"}).status_code == 400
        )
        assert (
            client.post(f"/api/session/{sid}/event", json={"type": "warp", "node": "n0"}).status_code
            == 400
        )
        assert (
            client.post(f"/api/session/{sid}/event", json={"nope": 1}).status_code == 400
        )


class TestScholarsEndpoint:
    def test_matches_direct_index_search(self, client, scholar_index):
        from scholarviz import ScholarQuery

        response = client.get(
            "/api/scholars",
            params={"keywords": "machine learning,classification", "offset": 0, "limit": 5},
        )
        assert response.status_code == 200
        body = response.json()
        page, total = scholar_index.search(
            ScholarQuery(keywords=("machine learning", "classification"), offset=0, limit=5)
        )
        assert body["total"] == total
        assert [item["id"] for item in body["items"]] == [r.id for r, _ in page]
        for item, (_, score) in zip(body["items"], page):
            assert item["score"] == pytest.approx(score)

    def test_missing_keywords_is_400(self, client):
        assert client.get("/api/scholars").status_code == 400
        assert client.get("/api/scholars", params={"keywords": " , "}).status_code == 400

    def test_bad_limit_is_400(self, client):
        response = client.get("/api/scholars", params={"keywords": "ranking", "limit": 0})
        assert response.status_code == 400

    def test_unknown_keyword_is_empty_result(self, client):
        response = client.get("/api/scholars", params={"keywords": "zzz"})
        assert response.status_code == 200
        assert response.json() == {"items": [], "total": 0, "offset": 0, "limit": 10}

    def test_byte_identical_replay(self, client):
        params = {"keywords": "machine learning", "limit": 7}
        first = client.get("/api/scholars", params=params)
        second = client.get("/api/scholars", params=params)
        assert first.content == second.content


class TestHealthAndConfig:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["concepts"] > 0
        assert body["scholars"] == 200

    def test_missing_data_file_fails_fast(self, service_config):
        import dataclasses

        from scholarviz.service import create_app

        broken = dataclasses.replace(service_config, taxonomy_path="/nope/taxonomy.jsonl")
        with pytest.raises(FileNotFoundError):
            create_app(broken)

    def test_env_overrides(self, monkeypatch, tmp_path):
        from scholarviz import load_config

        monkeypatch.setenv("SCHOLARVIZ_HOST", "0.0.0.0")
        monkeypatch.setenv("SCHOLARVIZ_PORT", "9999")
        monkeypatch.setenv("SCHOLARVIZ_TAXONOMY", str(tmp_path / "t.jsonl"))
        config = load_config(None)
        assert config.host == "0.0.0.0"
        assert config.port == 9999
        assert config.taxonomy_path.endswith("t.jsonl")

    def test_config_file_parsing(self, tmp_path):
        from scholarviz import load_config

        path = tmp_path / "svc.toml"
        path.write_text(
            """
[service]
port = 1234
page_size = 3

[layout]
link_max = 99.0
link_min = 9.0
""",
            encoding="utf-8",
        )
        config = load_config(str(path))
        assert config.port == 1234
        assert config.page_size == 3
        assert config.layout.link_max == 99.0

    def test_invalid_config_rejected(self, tmp_path):
        from scholarviz import load_config

        path = tmp_path / "svc.toml"
        path.write_text("[service]\npage_size = 0\n", encoding="utf-8")
        with pytest.raises(ValueError):
            load_config(str(path))
