import pytest
from fastapi.testclient import TestClient

from braidpos.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


class TestHealth:
    def test_healthz(self, client):
        response = client.get("/healthz")
        assert response.status_code == 200
        assert response.json()["status"] == "ok"


class TestBraidEndpoint:
    def test_trefoil(self, client):
        response = client.post("/braid", json={"word": "s1^3 @2"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["schema"] == 1
        assert payload["legendrian"]["tb"] == 1
        assert payload["alexander"] == [[1, -1], [-1, 0], [1, 1]]
        assert payload["signature"] == -2
        assert payload["verdict"]["positive_braid"] == "yes"

    def test_link_is_reported_not_rejected(self, client):
        response = client.post("/braid", json={"word": "s1 s1 @2"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["is_knot"] is False
        assert payload["verdict"] is None

    def test_parse_error_maps_to_422(self, client):
        response = client.post("/braid", json={"word": "not a braid"})
        assert response.status_code == 422
        assert "position" in response.json()["detail"]


class TestAnalyzeEndpoint:
    def test_twist_one(self, client):
        response = client.post("/analyze", json={"expression": "twist(1)"})
        assert response.status_code == 200
        payload = response.json()
        assert payload["verdict"]["not_qp"] == "yes"
        assert payload["verdict"]["tau"] == 0

    def test_contradiction_maps_to_422(self, client):
        response = client.post("/analyze", json={"expression": "T(2,3) {g4=0}"})
        assert response.status_code == 422

    def test_tb_table_in_request(self, client):
        response = client.post(
            "/analyze",
            json={
                "expression": "wh+(T(2,3) {tb=1}; 7)",
                "tb_table": [{"name": "mirror(T(2,3))", "tb": -6, "note": "table"}],
            },
        )
        assert response.status_code == 200
        payload = response.json()
        assert payload["verdict"]["tau"] == 0
        assert payload["verdict"]["not_qp"] == "yes"

    def test_conjectural_toggle(self, client):
        response = client.post(
            "/analyze", json={"expression": "twist(-1)", "enable_conjectural": True}
        )
        assert response.status_code == 200
        payload = response.json()
        assert payload["verdict"]["tau"] == 1
        assert any(c["conjectural"] for c in payload["verdict"]["certificates"])

    def test_closure_includes_braid_block(self, client):
        response = client.post("/analyze", json={"expression": 'closure("s1 s1 s1 @2")'})
        assert response.status_code == 200
        assert response.json()["braid"]["determinant"] == 3


class TestSelftestEndpoint:
    def test_passes(self, client):
        response = client.get("/selftest")
        assert response.status_code == 200
        payload = response.json()
        assert payload["passed"] is True
        assert all(check["passed"] for check in payload["checks"])
