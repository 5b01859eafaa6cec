"""JSON HTTP service: game sessions, tree-ball dumps, lattice pairings.

State lives in memory keyed by game id; every mutation is idempotent per
request_id and guarded by a per-game lock.  An optional JSON snapshot file
persists the games across restarts.
"""
from __future__ import annotations

import json
import threading
import uuid
from pathlib import Path

from fastapi import Body, FastAPI
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import game as gm
from . import lattice as lt
from . import quaternions as qt
from . import tree as tr
from .padic import DEFAULT_PRECISION, PrecisionExhausted
from .ratio import fr_str

MAX_BALL_RADIUS = 6
MAX_SCRAMBLE = 64


class GameStore:
    """Thread-safe id -> GameState map with per-game mutation locks and
    an idempotency cache of request_id -> response payload."""

    def __init__(self, persist_path: str | None = None):
        self._games: dict[str, gm.GameState] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._replies: dict[str, dict[str, dict]] = {}
        self._lock = threading.Lock()
        self._persist_path = Path(persist_path) if persist_path else None
        self._load()

    def _load(self) -> None:
        if self._persist_path and self._persist_path.exists():
            data = json.loads(self._persist_path.read_text())
            for game_id, payload in data.get("games", {}).items():
                self._games[game_id] = gm.GameState.from_json(payload)
                self._locks[game_id] = threading.Lock()
                self._replies[game_id] = {}

    def _snapshot(self) -> None:
        if self._persist_path is None:
            return
        data = {"games": {game_id: state.to_json()
                          for game_id, state in self._games.items()}}
        tmp = self._persist_path.with_suffix(".tmp")
        tmp.write_text(json.dumps(data))
        tmp.replace(self._persist_path)

    def create(self, state: gm.GameState) -> str:
        game_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._games[game_id] = state
            self._locks[game_id] = threading.Lock()
            self._replies[game_id] = {}
            self._snapshot()
        return game_id

    def get(self, game_id: str) -> gm.GameState | None:
        with self._lock:
            return self._games.get(game_id)

    def mutate(self, game_id: str, request_id: str | None, fn):
        """Apply fn(state) -> (state, payload) under the game's lock;
        repeated request_ids replay the stored payload unchanged."""
        with self._lock:
            lock = self._locks.get(game_id)
        if lock is None:
            return None
        with lock:
            if request_id is not None:
                cached = self._replies[game_id].get(request_id)
                if cached is not None:
                    return cached
            state, payload = fn(self._games[game_id])
            with self._lock:
                self._games[game_id] = state
                if request_id is not None:
                    self._replies[game_id][request_id] = payload
                self._snapshot()
            return payload


def word_tree_vertex(word) -> tr.TreeVertex:
    """The tree vertex reached from the base by the word's group element."""
    precision = max(DEFAULT_PRECISION, 4 * len(word.free) + 8)
    q = qt.word_quaternion(word.free, word.perm)
    try:
        return tr.act(tr.split_quaternion(q, precision), tr.BASE)
    except PrecisionExhausted:
        return tr.act(tr.split_quaternion(q, 2 * precision), tr.BASE)


def game_payload(game_id: str, state: gm.GameState) -> dict:
    payload = state.to_json()
    payload["id"] = game_id
    payload["solved"] = state.is_solved()
    payload["tree_vertex"] = word_tree_vertex(state.word).to_json()
    return payload


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(static_dir: str | None = None,
               persist_path: str | None = None) -> FastAPI:
    app = FastAPI(title="tetraflect", docs_url=None, redoc_url=None)
    store = GameStore(persist_path)
    new_replies: dict[str, dict] = {}
    new_lock = threading.Lock()

    @app.get("/api/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/api/game/new")
    def game_new(payload: dict = Body(default={})):
        request_id = payload.get("request_id")
        with new_lock:
            if request_id is not None and request_id in new_replies:
                return new_replies[request_id]
        length = payload.get("scramble", 0)
        seed = payload.get("seed")
        if not isinstance(length, int) or not 0 <= length <= MAX_SCRAMBLE:
            return _error(400, f"scramble must be an integer in "
                               f"0..{MAX_SCRAMBLE}")
        if seed is not None and not isinstance(seed, int):
            return _error(400, "seed must be an integer")
        state = gm.scramble(length, seed)
        game_id = store.create(state)
        reply = game_payload(game_id, state)
        with new_lock:
            if request_id is not None:
                new_replies[request_id] = reply
        return reply

    @app.get("/api/game/{game_id}")
    def game_get(game_id: str):
        state = store.get(game_id)
        if state is None:
            return _error(404, f"unknown game id: {game_id}")
        return game_payload(game_id, state)

    @app.post("/api/game/{game_id}/move")
    def game_move(game_id: str, payload: dict = Body(...)):
        token = payload.get("move")
        if not isinstance(token, str):
            return _error(400, "move must be a token string")
        try:
            gm.parse_move(token)
        except ValueError as exc:
            return _error(400, str(exc))

        def step(state: gm.GameState):
            new_state = gm.apply_move(state, token)
            return new_state, game_payload(game_id, new_state)

        reply = store.mutate(game_id, payload.get("request_id"), step)
        if reply is None:
            return _error(404, f"unknown game id: {game_id}")
        return reply

    @app.post("/api/game/{game_id}/solve")
    def game_solve(game_id: str, payload: dict = Body(default={})):
        state = store.get(game_id)
        if state is None:
            return _error(404, f"unknown game id: {game_id}")
        return {"id": game_id, "moves": gm.solve(state)}

    @app.get("/api/tree/ball")
    def tree_ball(r: int = 2):
        if not 0 <= r <= MAX_BALL_RADIUS:
            return _error(400, f"radius must be in 0..{MAX_BALL_RADIUS}")
        try:
            adjacency = tr.ball_adjacency(r)
        except PrecisionExhausted:
            adjacency = tr.ball_adjacency(r, 2 * DEFAULT_PRECISION)
        vertices = list(adjacency)
        index = {v: i for i, v in enumerate(vertices)}
        return {"radius": r,
                "vertices": [v.to_json() for v in vertices],
                "adjacency": [[index[u] for u in adjacency[v]]
                              for v in vertices]}

    @app.post("/api/lattice/inner_product")
    def inner_product(payload: dict = Body(...)):
        try:
            left = lt.LatticeVector.from_json(payload["left"])
            right = lt.LatticeVector.from_json(payload["right"])
        except (KeyError, ValueError, TypeError) as exc:
            return _error(400, f"need 'left' and 'right' vectors of 10 "
                               f"exact rational strings: {exc}")
        return {"value": fr_str(lt.inner_product(left, right))}

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="static")
    return app
