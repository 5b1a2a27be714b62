"""HTTP service: endpoint behavior, wire formats, error mapping."""

import pytest
from fastapi.testclient import TestClient

from vibham import builtin_cloh, render_model
from vibham.service import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_count(client):
    response = client.post("/count", json={"modes": 3, "order": 8})
    assert response.status_code == 200
    assert response.json() == {"count": 34}


def test_count_rejects_odd_order(client):
    response = client.post("/count", json={"modes": 3, "order": 7})
    assert response.status_code == 400
    assert "even" in response.json()["detail"]


def test_count_schema_validation(client):
    assert client.post("/count", json={"modes": 0, "order": 8}).status_code == 422
    assert client.post("/count", json={"modes": 3}).status_code == 422


def test_signatures(client):
    body = client.post("/signatures", json={"modes": 3, "order": 4}).json()
    assert len(body["signatures"]) == 9
    assert body["signatures"][0] == [0, 0, 1]


def test_operators_by_order(client):
    body = client.post("/operators-by-order", json={"modes": 3, "order": 8}).json()
    assert body["by_order"] == {"2": 3, "4": 6, "6": 10, "8": 15}


def test_bracket(client):
    body = client.post("/bracket", json={"modes": 2, "p": "s1", "q": "s2"}).json()
    assert body == {"result": "0"}
    body = client.post("/bracket", json={"modes": 1, "p": "z1", "q": "zs1"}).json()
    assert body == {"result": "-1i"}


def test_bracket_reports_grammar_errors(client):
    response = client.post("/bracket", json={"modes": 2, "p": "z9", "q": "s1"})
    assert response.status_code == 400
    assert "out of range" in response.json()["detail"]


def test_kernel(client):
    body = client.post(
        "/kernel",
        json={"modes": 2, "omega": [739.685, 1245.09], "monomial": "z1*zs2", "tol": 0.5},
    ).json()
    assert body == {"in_kernel": False, "weight": [-1, 1]}
    body = client.post(
        "/kernel", json={"modes": 2, "omega": [3.7, 9.1], "monomial": "s1*s2^2"}
    ).json()
    assert body["in_kernel"] is True
    assert body["weight"] == [0, 0]


def test_kernel_rejects_non_monomials(client):
    response = client.post(
        "/kernel", json={"modes": 2, "omega": [1.0, 2.0], "monomial": "z1 + z2"}
    )
    assert response.status_code == 400


def test_resonance(client):
    body = client.post(
        "/resonance", json={"omega": [1.0, 2.0], "bound": 2, "tol": 1e-9}
    ).json()
    assert body == {"found": True, "vector": [-2, 1]}
    body = client.post(
        "/resonance",
        json={"omega": [739.685, 1245.09, 3748.47], "bound": 3, "tol": 0.5},
    ).json()
    assert body == {"found": False, "vector": None}


def test_energy_builtin(client):
    body = client.post(
        "/energy", json={"model": {"builtin": "cloh"}, "state": [1, 0, 0]}
    ).json()
    assert body["energy"] == pytest.approx(735.9188, abs=1e-6)


def test_energy_with_delta_override(client):
    with_half = client.post(
        "/energy",
        json={"model": {"builtin": "cloh", "delta": 0.5}, "state": [0, 0, 0]},
    ).json()
    assert with_half["energy"] == 0.0


def test_energy_from_model_text(client):
    text = render_model(builtin_cloh())
    body = client.post(
        "/energy", json={"model": {"model_text": text}, "state": [0, 0, 1]}
    ).json()
    assert body["energy"] == pytest.approx(3663.7723, abs=1e-6)


def test_model_payload_requires_exactly_one_source(client):
    assert (
        client.post("/energy", json={"model": {}, "state": [0, 0, 0]}).status_code
        == 422
    )
    assert (
        client.post(
            "/energy",
            json={"model": {"builtin": "cloh", "model_text": "name x"}, "state": [0]},
        ).status_code
        == 422
    )


def test_energy_unknown_builtin(client):
    response = client.post(
        "/energy", json={"model": {"builtin": "nope"}, "state": [0, 0, 0]}
    )
    assert response.status_code == 400
    assert "unknown builtin" in response.json()["detail"]


def test_energy_gates_on_error_findings(client):
    bad = "name x\nmodes 2\norder 4\ndelta 0\nreference 0\nomega 1 5.0\nomega 2 5.0\n"
    response = client.post(
        "/energy", json={"model": {"model_text": bad}, "state": [0, 0]}
    )
    assert response.status_code == 400
    assert "pairwise distinct" in response.json()["detail"]


def test_spectrum(client):
    body = client.post(
        "/spectrum", json={"model": {"builtin": "cloh"}, "cutoff": 800.0}
    ).json()
    assert body["modes"] == 3
    assert body["count"] == 2
    assert body["levels"][0] == {"state": [0, 0, 0], "energy": 0.0}
    assert body["levels"][1]["state"] == [1, 0, 0]
    assert body["max_energy"] == pytest.approx(735.9188, abs=1e-6)


def test_spectrum_negative_cutoff(client):
    response = client.post(
        "/spectrum", json={"model": {"builtin": "cloh"}, "cutoff": -5.0}
    )
    assert response.status_code == 400


def test_model_validate_endpoint(client):
    body = client.post("/model/validate", json={"model": {"builtin": "cloh"}}).json()
    assert body == {"clean": True, "findings": []}
    near = "name r\nmodes 2\norder 4\ndelta 0\nreference 0\nomega 1 100.0\nomega 2 200.0\n"
    body = client.post("/model/validate", json={"model": {"model_text": near}}).json()
    assert body["clean"] is False
    assert body["findings"][0]["severity"] == "warning"


def test_model_text_parse_error_carries_line_number(client):
    response = client.post(
        "/model/validate", json={"model": {"model_text": "name x\nbanana 1\n"}}
    )
    assert response.status_code == 400
    assert "line 2" in response.json()["detail"]


def test_check_endpoint(client):
    body = client.post(
        "/check", json={"modes": 2, "order": 6, "seed": 42, "samples": 10}
    ).json()
    assert body["all_passed"] is True
    names = [r["name"] for r in body["results"]]
    assert "bracket-jacobi" in names
    assert "adjoint-eigenrelation" in names
    assert all(r["passed"] for r in body["results"])
