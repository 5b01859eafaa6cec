"""HTTP service: endpoints, idempotency, errors, persistence."""
import json

import pytest
from fastapi.testclient import TestClient

from tetraflect.server import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def test_health(client):
    response = client.get("/api/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


class TestGameEndpoints:
    def test_new_scrambled(self, client):
        response = client.post("/api/game/new",
                               json={"scramble": 5, "seed": 7})
        assert response.status_code == 200
        state = response.json()
        assert len(state["history"]) == 5
        assert len(state["word"]["free"]) == 5
        assert state["solved"] is False
        assert set(state) == {"id", "pose", "history", "word", "solved",
                              "tree_vertex"}
        # scrambles are facet words, so tree depth = word length
        v = state["tree_vertex"]
        assert v["a"] + v["b"] == 5

    def test_pose_entries_are_exact_strings(self, client):
        state = client.post("/api/game/new",
                            json={"scramble": 2, "seed": 0}).json()
        for row in state["pose"]["linear"]:
            for entry in row:
                assert isinstance(entry, str)
        for entry in state["pose"]["translation"]:
            assert isinstance(entry, str)

    def test_new_is_idempotent_per_request_id(self, client):
        body = {"scramble": 3, "seed": 2, "request_id": "r1"}
        first = client.post("/api/game/new", json=body).json()
        second = client.post("/api/game/new", json=body).json()
        assert first == second

    def test_get_roundtrip(self, client):
        created = client.post("/api/game/new",
                              json={"scramble": 4, "seed": 9}).json()
        fetched = client.get(f"/api/game/{created['id']}").json()
        assert fetched == created

    def test_get_unknown_is_404(self, client):
        response = client.get("/api/game/no-such-id")
        assert response.status_code == 404
        assert "error" in response.json()

    def test_move_appends_history(self, client):
        game_id = client.post("/api/game/new", json={}).json()["id"]
        state = client.post(f"/api/game/{game_id}/move",
                            json={"move": "F0"}).json()
        assert state["history"] == ["F0"]
        assert state["word"] == {"free": [0], "perm": [0, 1, 2, 3]}
        assert state["tree_vertex"] != {"a": 0, "b": 0, "c": 0}
        state = client.post(f"/api/game/{game_id}/move",
                            json={"move": "S=(1032)"}).json()
        assert state["history"] == ["F0", "S=(1032)"]
        assert state["word"]["perm"] == [1, 0, 3, 2]

    def test_move_is_idempotent_per_request_id(self, client):
        game_id = client.post("/api/game/new", json={}).json()["id"]
        body = {"move": "F1", "request_id": "once"}
        first = client.post(f"/api/game/{game_id}/move", json=body).json()
        second = client.post(f"/api/game/{game_id}/move", json=body).json()
        assert first == second
        assert second["history"] == ["F1"]
        third = client.post(f"/api/game/{game_id}/move",
                            json={"move": "F1", "request_id": "twice"}
                            ).json()
        assert third["history"] == ["F1", "F1"] == list(third["history"])
        assert third["solved"] is True

    def test_move_errors(self, client):
        game_id = client.post("/api/game/new", json={}).json()["id"]
        assert client.post(f"/api/game/{game_id}/move",
                           json={"move": "F9"}).status_code == 400
        assert client.post(f"/api/game/{game_id}/move",
                           json={}).status_code == 400
        assert client.post("/api/game/missing/move",
                           json={"move": "F0"}).status_code == 404

    def test_new_validation(self, client):
        assert client.post("/api/game/new",
                           json={"scramble": -1}).status_code == 400
        assert client.post("/api/game/new",
                           json={"scramble": 1000}).status_code == 400
        assert client.post("/api/game/new",
                           json={"seed": "x"}).status_code == 400

    def test_solve_returns_replayable_moves(self, client):
        state = client.post("/api/game/new",
                            json={"scramble": 6, "seed": 11}).json()
        game_id = state["id"]
        moves = client.post(f"/api/game/{game_id}/solve").json()["moves"]
        assert moves == [f"F{a}" for a in reversed(state["word"]["free"])]
        for move in moves:
            state = client.post(f"/api/game/{game_id}/move",
                                json={"move": move}).json()
        assert state["solved"] is True
        assert state["word"] == {"free": [], "perm": [0, 1, 2, 3]}
        assert state["tree_vertex"] == {"a": 0, "b": 0, "c": 0}

    def test_solve_unknown_is_404(self, client):
        assert client.post("/api/game/missing/solve").status_code == 404


class TestTreeEndpoint:
    def test_ball_radius_two(self, client):
        payload = client.get("/api/tree/ball?r=2").json()
        assert payload["radius"] == 2
        assert len(payload["vertices"]) == 17
        assert payload["vertices"][0] == {"a": 0, "b": 0, "c": 0}
        assert len(payload["adjacency"]) == 17
        for i, adj in enumerate(payload["adjacency"]):
            for j in adj:
                assert i in payload["adjacency"][j]

    def test_ball_radius_capped(self, client):
        assert client.get("/api/tree/ball?r=40").status_code == 400
        assert client.get("/api/tree/ball?r=-1").status_code == 400


class TestLatticeEndpoint:
    def test_inner_product_exact_strings(self, client):
        body = {"left": ["1"] * 10, "right": ["1/2"] + ["0"] * 9}
        response = client.post("/api/lattice/inner_product", json=body)
        assert response.json() == {"value": "1/2"}

    def test_inner_product_rejects_floats(self, client):
        body = {"left": [0.5] + ["0"] * 9 + [], "right": ["1"] * 10}
        body["left"] = [0.5] + ["0"] * 9
        assert client.post("/api/lattice/inner_product",
                           json=body).status_code == 400

    def test_inner_product_rejects_short_vectors(self, client):
        body = {"left": ["1"] * 9, "right": ["1"] * 10}
        assert client.post("/api/lattice/inner_product",
                           json=body).status_code == 400


class TestPersistence:
    def test_snapshot_restores_games(self, tmp_path):
        path = tmp_path / "games.json"
        first = TestClient(create_app(persist_path=str(path)))
        state = first.post("/api/game/new",
                           json={"scramble": 3, "seed": 5}).json()
        game_id = state["id"]
        first.post(f"/api/game/{game_id}/move", json={"move": "F2"})

        second = TestClient(create_app(persist_path=str(path)))
        restored = second.get(f"/api/game/{game_id}")
        assert restored.status_code == 200
        assert len(restored.json()["history"]) == 4

    def test_snapshot_file_is_json(self, tmp_path):
        path = tmp_path / "games.json"
        client = TestClient(create_app(persist_path=str(path)))
        client.post("/api/game/new", json={})
        data = json.loads(path.read_text())
        assert set(data) == {"games"}


class TestStatic:
    def test_static_dir_served_with_api(self, tmp_path):
        (tmp_path / "index.html").write_text("<h1>tetraflect</h1>")
        client = TestClient(create_app(static_dir=str(tmp_path)))
        assert client.get("/api/health").json() == {"status": "ok"}
        response = client.get("/")
        assert response.status_code == 200
        assert "tetraflect" in response.text
