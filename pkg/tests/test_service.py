import json

import pytest
from fastapi.testclient import TestClient

from alt_readability.service import MAX_BODY_BYTES, create_app


@pytest.fixture(scope="module")
def client(lexicon):
    return TestClient(create_app(lexicon))


class TestHealth:
    def test_ok(self, client, lexicon):
        response = client.get("/health")
        assert response.status_code == 200
        body = response.json()
        assert body["status"] == "ok"
        assert body["bankSize"] == lexicon.bank_size


class TestAnalyze:
    def test_minimal_text(self, client):
        response = client.post("/analyze", json={"text": "Oi."})
        assert response.status_code == 200
        body = response.json()
        assert body["stats"]["words"] == 1
        assert body["schema"] == 1

    def test_empty_text_is_422(self, client):
        response = client.post("/analyze", json={"text": ""})
        assert response.status_code == 422
        assert "error" in response.json()

    def test_malformed_json_is_400(self, client):
        response = client.post(
            "/analyze", content=b"{not json", headers={"content-type": "application/json"}
        )
        assert response.status_code == 400

    def test_missing_text_field_is_400(self, client):
        response = client.post("/analyze", json={"keywords": ["a"]})
        assert response.status_code == 400

    def test_oversized_body_is_413(self, client):
        huge = "a " * (MAX_BODY_BYTES // 2 + 16)
        response = client.post("/analyze", json={"text": huge})
        assert response.status_code == 413

    def test_keywords_and_topn(self, client, brasil_text):
        response = client.post(
            "/analyze",
            json={"text": brasil_text, "keywords": ["brasil", "madeira"], "topN": 3},
        )
        body = response.json()
        assert [e["token"] for e in body["keywords"]] == ["brasil", "madeira"]
        assert len(body["cloud"]) == 3

    def test_profile_original(self, client):
        response = client.post("/analyze", json={"text": "Oi.", "profile": "original"})
        assert "originalIndices" in response.json()

    def test_utf8_roundtrip(self, client):
        response = client.post("/analyze", json={"text": "coração e ação."})
        assert "charset=utf-8" in response.headers["content-type"]
        assert response.json()["stats"]["words"] == 3

    def test_statelessness(self, client, brasil_text):
        first = client.post("/analyze", json={"text": brasil_text}).text
        client.post("/analyze", json={"text": "Outro texto qualquer."})
        second = client.post("/analyze", json={"text": brasil_text}).text
        assert first == second


class TestCors:
    def test_configured_origin_allowed(self, lexicon):
        app = create_app(lexicon, cors_origin="http://localhost:5173")
        client = TestClient(app)
        response = client.options(
            "/analyze",
            headers={
                "Origin": "http://localhost:5173",
                "Access-Control-Request-Method": "POST",
            },
        )
        assert response.status_code == 200
        assert response.headers["access-control-allow-origin"] == "http://localhost:5173"
