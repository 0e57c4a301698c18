import pytest
from fastapi.testclient import TestClient

from diopair import __version__
from diopair.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


class TestHealth:
    def test_ok(self, client):
        r = client.get("/v1/health")
        assert r.status_code == 200
        assert r.json() == {"status": "ok", "version": __version__}


class TestGamma:
    def test_classification_detail(self, client):
        r = client.post("/v1/gamma", json={"a": 15, "b": 85})
        assert r.status_code == 200
        body = r.json()
        assert body["gamma"] == 2
        assert (body["reduced_a"], body["reduced_b"], body["common_divisor"]) == (3, 17, 5)
        assert body["branch"] == "first-odd"
        assert body["theta"] == 2
        assert body["solution"] is None

    def test_solve_returns_witness(self, client):
        r = client.post("/v1/gamma", json={"a": 15, "b": 85, "solve": True})
        assert r.status_code == 200
        assert r.json()["solution"] == {"equation": 2, "x": 5, "y": 0}

    def test_divides_branch_has_no_theta(self, client):
        r = client.post("/v1/gamma", json={"a": 4, "b": 8})
        body = r.json()
        assert body["gamma"] == 1
        assert body["branch"] == "divides"
        assert body["theta"] is None

    def test_validation(self, client):
        r = client.post("/v1/gamma", json={"a": 0, "b": 5})
        assert r.status_code == 422


class TestTheta:
    def test_value(self, client):
        r = client.post("/v1/theta", json={"a": 15, "b": 85})
        assert r.status_code == 200
        assert r.json() == {"a": 15, "b": 85, "theta": 6}

    def test_undefined_is_domain_error(self, client):
        r = client.post("/v1/theta", json={"a": 6, "b": 3})
        assert r.status_code == 400
        body = r.json()
        assert body["kind"] == "domain"
        assert "undefined" in body["detail"]


class TestDelta:
    def test_fibonacci_with_runs(self, client):
        r = client.post(
            "/v1/delta",
            json={"family": "fibonacci", "count": 11, "include_runs": True},
        )
        assert r.status_code == 200
        body = r.json()
        assert [rec["gamma"] for rec in body["records"]] == [1, 1, 2, 2, 2, 1, 1, 1, 2, 2, 2]
        assert body["runs"] == [
            {"tag": 1, "length": 2},
            {"tag": 2, "length": 3},
            {"tag": 1, "length": 3},
            {"tag": 2, "length": 3},
        ]

    def test_runs_omitted_by_default(self, client):
        r = client.post("/v1/delta", json={"family": "ap", "a": 2, "r": 3, "count": 3})
        body = r.json()
        assert [rec["gamma"] for rec in body["records"]] == [1, 2, 1]
        assert body["runs"] is None

    def test_record_fields(self, client):
        r = client.post("/v1/delta", json={"family": "power", "k": 2, "start": 3, "count": 1})
        assert r.json()["records"] == [
            {"n": 3, "term": 9, "next_term": 16, "gcd": 1, "gamma": 2}
        ]

    def test_explicit_terms_inline(self, client):
        r = client.post(
            "/v1/delta",
            json={"family": "explicit", "terms": [1, 2, 3, 4, 5, 6, 7], "count": 6},
        )
        assert [rec["gamma"] for rec in r.json()["records"]] == [1, 2, 1, 2, 1, 2]

    def test_big_integers_survive_the_wire(self, client):
        big = 10**40
        r = client.post(
            "/v1/delta", json={"family": "explicit", "terms": [big, big + 1], "count": 1}
        )
        assert r.status_code == 200
        (rec,) = r.json()["records"]
        assert rec["term"] == big
        assert rec["next_term"] == big + 1
        assert rec["gcd"] == 1

    def test_unknown_family_is_domain_error(self, client):
        r = client.post("/v1/delta", json={"family": "bogus", "count": 1})
        assert r.status_code == 400
        assert r.json()["kind"] == "domain"

    def test_missing_parameter_is_domain_error(self, client):
        r = client.post("/v1/delta", json={"family": "power", "count": 1})
        assert r.status_code == 400

    def test_window_exceeding_explicit_terms(self, client):
        r = client.post(
            "/v1/delta", json={"family": "explicit", "terms": [3, 5], "count": 2}
        )
        assert r.status_code == 400


class TestPeriod:
    def test_k2(self, client):
        r = client.post("/v1/period", json={"k": 2})
        assert r.json() == {
            "k": 2,
            "period": 4,
            "ones_per_period": 3,
            "twos_per_period": 1,
            "witness": [1, 1, 2, 1],
            "window_used": 16,
        }

    def test_window_too_small(self, client):
        r = client.post("/v1/period", json={"k": 2, "window": 7})
        assert r.status_code == 400


class TestMk:
    def test_k3(self, client):
        r = client.post("/v1/mk", json={"k": 3})
        assert r.json() == {"k": 3, "m_k": 7, "g_coefficients": [1, 3, 6]}


class TestDensity:
    def test_two_checkpoints(self, client):
        r = client.post("/v1/density", json={"x_max": 3, "samples": 2})
        assert r.status_code == 200
        body = r.json()
        assert body["final_ratio"] == "0.50000000"
        xs = [s["x"] for s in body["samples"]]
        assert xs == [2, 3]
        first = body["samples"][0]
        assert (first["total_pairs"], first["gamma1_pairs"]) == (3, 2)
        assert first["reduced_gamma1_pairs"] == 3

    def test_coprime_denominator(self, client):
        r = client.post("/v1/density", json={"x_max": 3, "coprime": True})
        (sample,) = r.json()["samples"]
        assert (sample["total_pairs"], sample["gamma1_pairs"]) == (4, 3)


class TestVerify:
    def test_small_limit(self, client):
        r = client.post("/v1/verify", json={"limit": 20})
        body = r.json()
        assert body["ok"] is True
        assert body["uniqueness_pairs_checked"] == 128
        assert body["equivalence_pairs_checked"] == 400
        assert body["uniqueness_counterexamples"] == []
        assert body["equivalence_mismatches"] == []

    def test_limit_must_be_at_least_two(self, client):
        r = client.post("/v1/verify", json={"limit": 1})
        assert r.status_code == 422


class TestRouting:
    def test_openapi_lists_every_route(self, client):
        paths = client.get("/openapi.json").json()["paths"]
        for route in (
            "/v1/health",
            "/v1/gamma",
            "/v1/theta",
            "/v1/delta",
            "/v1/period",
            "/v1/mk",
            "/v1/density",
            "/v1/verify",
        ):
            assert route in paths
