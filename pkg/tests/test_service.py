import pytest
from fastapi.testclient import TestClient

from warpmat import grid_from_json, grid_to_json, load_fixture_grid, solve
from warpmat.service import SessionStore, create_app

SEVEN_CROSSINGS = "O1+U2+O3+U4+O5+U6+O7+U1+O2+U3+O4+U5+O6+U7+"


@pytest.fixture()
def client():
    with TestClient(create_app()) as c:
        yield c


def new_session(client, **overrides):
    body = {"knot": "trefoil"}
    body.update(overrides)
    response = client.post("/puzzle/new", json=body)
    assert response.status_code == 200, response.text
    return response.json()


class TestNewPuzzle:
    def test_preset_serves_the_fixture_grid(self, client):
        data = new_session(client)
        assert data["c"] == 3
        assert data["grid"] == grid_to_json(load_fixture_grid("trefoil"))
        assert isinstance(data["session_id"], str) and len(data["session_id"]) == 16

    def test_figure8_preset(self, client):
        data = new_session(client, knot="figure8")
        assert data["c"] == 4
        assert data["grid"] == grid_to_json(load_fixture_grid("figure8"))

    def test_generated_puzzles_are_seeded(self, client):
        a = new_session(client, knot="O1+U2+O2+U1+", seed=9)
        b = new_session(client, knot="O1+U2+O2+U1+", seed=9)
        assert a["session_id"] != b["session_id"]
        assert a["grid"] == b["grid"]
        grid = grid_from_json(a["grid"])
        assert len(solve(grid, ("i", "ii"), limit=2)) == 1

    def test_preset_with_seed_regenerates(self, client):
        data = new_session(client, knot="trefoil", seed=0)
        assert data["grid"] != grid_to_json(load_fixture_grid("trefoil"))

    def test_missing_knot(self, client):
        assert client.post("/puzzle/new", json={}).status_code == 400

    def test_bad_gauss_code(self, client):
        response = client.post("/puzzle/new", json={"knot": "O1+O1+"})
        assert response.status_code == 400
        assert "Gauss code" in response.json()["detail"]

    def test_bad_rules(self, client):
        response = client.post("/puzzle/new", json={"knot": "trefoil", "rules": ["v"]})
        assert response.status_code == 400

    def test_bad_seed_type(self, client):
        response = client.post("/puzzle/new", json={"knot": "trefoil", "seed": "zero"})
        assert response.status_code == 400

    def test_too_many_crossings(self, client):
        response = client.post("/puzzle/new", json={"knot": SEVEN_CROSSINGS})
        assert response.status_code == 422

    def test_non_json_body(self, client):
        response = client.post(
            "/puzzle/new", content=b"not json", headers={"Content-Type": "application/json"}
        )
        assert response.status_code == 400
        assert response.json() == {"detail": "malformed request body"}


class TestValidate:
    def test_clues_alone_are_clean_but_unsolved(self, client):
        data = new_session(client)
        response = client.post(
            f"/puzzle/{data['session_id']}/validate", json={"cells": data["grid"]["cells"]}
        )
        body = response.json()
        assert response.status_code == 200
        assert body["violations"] == []
        assert body["solved"] is False
        assert body["matches_solution"] is False

    def test_violations_carry_cells(self, client):
        data = new_session(client)
        cells = [row[:] for row in data["grid"]["cells"]]
        # trefoil fixture row 4 starts (None, 1, ...): a neighbouring 1 breaks rule i
        cells[4][0] = 1
        response = client.post(
            f"/puzzle/{data['session_id']}/validate", json={"cells": cells}
        )
        body = response.json()
        assert any(v["rule"] == "i" and [4, 0] in v["cells"] for v in body["violations"])
        assert body["solved"] is False

    def test_solving_by_hints_reaches_solved(self, client):
        data = new_session(client)
        sid = data["session_id"]
        cells = [row[:] for row in data["grid"]["cells"]]
        for _ in range(8 * 6 - 15):
            hint = client.post(f"/puzzle/{sid}/hint", json={"cells": cells}).json()
            cells[hint["row"]][hint["col"]] = hint["digit"]
        result = client.post(f"/puzzle/{sid}/validate", json={"cells": cells}).json()
        assert result == {
            "violations": [],
            "solved": True,
            "matches_solution": True,
            "satisfies_all_rules": True,
        }

    def test_any_law_abiding_completion_counts_as_solved(self, client):
        data = new_session(client)
        sid = data["session_id"]
        full = client.app.state.sessions.get(sid).solution
        rows = list(full.cells)
        rows[0], rows[-1] = rows[-1], rows[0]  # row swaps preserve all four laws
        result = client.post(f"/puzzle/{sid}/validate", json={"cells": [list(r) for r in rows]}).json()
        assert result["matches_solution"] is False
        assert result["satisfies_all_rules"] is True
        assert result["solved"] is True

    def test_rule_conforming_but_wrong_matrix_is_not_solved(self, client):
        data = new_session(client, knot="O1+U2+O2+U1+", seed=3)
        cells = [[0, 1, 0, 1], [1, 2, 1, 2], [1, 0, 1, 0], [2, 1, 2, 1]]
        result = client.post(
            f"/puzzle/{data['session_id']}/validate", json={"cells": cells}
        ).json()
        assert result["violations"] == []  # session rules are i,ii
        assert result["matches_solution"] is False
        assert result["satisfies_all_rules"] is False  # rule iv fails
        assert result["solved"] is False

    def test_unknown_session(self, client):
        response = client.post("/puzzle/deadbeef/validate", json={"cells": []})
        assert response.status_code == 404

    def test_malformed_cells(self, client):
        data = new_session(client)
        sid = data["session_id"]
        assert client.post(f"/puzzle/{sid}/validate", json={"cells": "x"}).status_code == 400
        assert client.post(f"/puzzle/{sid}/validate", json={}).status_code == 400
        bad_shape = [[None] * 6] * 4
        assert (
            client.post(f"/puzzle/{sid}/validate", json={"cells": bad_shape}).status_code
            == 400
        )
        bad_digit = [row[:] for row in data["grid"]["cells"]]
        bad_digit[0][0] = 9
        assert (
            client.post(f"/puzzle/{sid}/validate", json={"cells": bad_digit}).status_code
            == 400
        )


class TestHint:
    def test_hint_matches_the_stored_solution(self, client):
        data = new_session(client)
        sid = data["session_id"]
        hint = client.post(f"/puzzle/{sid}/hint", json={"cells": data["grid"]["cells"]})
        assert hint.status_code == 200
        body = hint.json()
        solution = client.app.state.sessions.get(sid).solution
        assert data["grid"]["cells"][body["row"]][body["col"]] is None
        assert body["digit"] == solution.cells[body["row"]][body["col"]]

    def test_hint_on_full_grid_conflicts(self, client):
        data = new_session(client)
        sid = data["session_id"]
        solution = client.app.state.sessions.get(sid).solution
        response = client.post(
            f"/puzzle/{sid}/hint", json={"cells": [list(r) for r in solution.cells]}
        )
        assert response.status_code == 409

    def test_unknown_session(self, client):
        assert client.post("/puzzle/nope/hint", json={"cells": []}).status_code == 404


class TestExpiry:
    def test_sessions_lapse_after_ttl(self):
        now = {"t": 0.0}
        store = SessionStore(ttl=100, clock=lambda: now["t"])
        with TestClient(create_app(store)) as client:
            data = new_session(client)
            sid = data["session_id"]
            body = {"cells": data["grid"]["cells"]}
            now["t"] = 99.0
            assert client.post(f"/puzzle/{sid}/validate", json=body).status_code == 200
            now["t"] = 101.0
            assert client.post(f"/puzzle/{sid}/validate", json=body).status_code == 404

    def test_eviction_also_runs_on_add(self):
        now = {"t": 0.0}
        store = SessionStore(ttl=50, clock=lambda: now["t"])
        with TestClient(create_app(store)) as client:
            first = new_session(client)["session_id"]
            now["t"] = 60.0
            second = new_session(client)["session_id"]
            with pytest.raises(KeyError):
                store.get(first)
            assert store.get(second).session_id == second
