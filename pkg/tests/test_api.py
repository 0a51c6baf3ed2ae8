import pytest
from fastapi.testclient import TestClient

from main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_index(client):
    response = client.get("/")
    assert response.status_code == 200
    assert response.json()["status"] == "ok"


def test_analyze(client):
    response = client.post("/analyze", json={"generators": ["ZI", "IZ"], "trials": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["subgroup"]["order"] == 4
    assert [c["multiplicity"] for c in body["characters"]] == [1, 1, 1, 1]
    assert "nonabelian" not in body


def test_analyze_bad_string(client):
    response = client.post("/analyze", json={"generators": ["XQ"]})
    assert response.status_code == 400
    assert "position 1" in response.json()["detail"]


def test_analyze_refused(client):
    response = client.post("/analyze", json={"generators": ["XXI", "IZZ"], "require_dfs": True})
    assert response.status_code == 422


def test_analyze_missing_body_field(client):
    assert client.post("/analyze", json={}).status_code == 422


def test_preset(client):
    response = client.get("/preset/q2z", params={"trials": 4})
    assert response.status_code == 200
    body = response.json()
    assert body["preset"] == "q2z"
    assert body["characters"][0]["multiplicity"] == 2


def test_unknown_preset(client):
    assert client.get("/preset/q9").status_code == 400


def test_dimension(client):
    response = client.post("/dimension", json={"n_qubits": 4, "order": 8})
    assert response.status_code == 200
    assert response.json()["multiplicity"] == 2
    assert client.post("/dimension", json={"n_qubits": 2, "order": 8}).status_code == 400


def test_channel(client):
    response = client.post("/channel", json={"generators": ["ZI", "IZ"], "state": "|01>", "trials": 4})
    assert response.status_code == 200
    assert response.json()["stays_pure"] is True


def test_channel_preset(client):
    response = client.post("/channel", json={"preset": "qz", "trials": 4})
    assert response.status_code == 200
    assert response.json()["stays_pure"] is False


def test_channel_bad_state(client):
    response = client.post("/channel", json={"generators": ["ZI"], "state": "|2>"})
    assert response.status_code == 400
