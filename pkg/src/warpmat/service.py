"""HTTP facade over the puzzle engine.

Sessions are immutable after creation and held in memory with TTL
eviction; the client keeps the working grid and posts it back for
validation and hints.  The solution grid never leaves the server except
one cell at a time through the hint endpoint.
"""

from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import puzzle as pz
from . import rules as laws
from .diagrams import GaussCodeError, parse_gauss_code

DEFAULT_TTL_SECONDS = 24 * 3600
ALL_RULES = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class PuzzleSession:
    session_id: str
    c: int
    rules: tuple[str, ...]
    clues: pz.PuzzleGrid
    solution: pz.PuzzleGrid
    created_at: float


class SessionStore:
    """Thread-safe map of session id to immutable session, with lazy TTL."""

    def __init__(self, ttl: float = DEFAULT_TTL_SECONDS, clock=time.monotonic):
        self._ttl = ttl
        self._clock = clock
        self._lock = threading.Lock()
        self._sessions: dict[str, PuzzleSession] = {}

    def _evict(self, now: float):
        dead = [sid for sid, s in self._sessions.items() if now - s.created_at > self._ttl]
        for sid in dead:
            del self._sessions[sid]

    def add(self, session: PuzzleSession):
        with self._lock:
            self._evict(self._clock())
            self._sessions[session.session_id] = session

    def get(self, session_id: str) -> PuzzleSession:
        with self._lock:
            self._evict(self._clock())
            return self._sessions[session_id]

    def new_id(self) -> str:
        return secrets.token_hex(8)

    @property
    def clock(self):
        return self._clock


def _grid_from_cells(c: int, cells) -> pz.PuzzleGrid:
    if not isinstance(cells, list):
        raise pz.GridError("cells must be a list of rows")
    return pz.grid_from_json({"c": c, "cells": cells})


def _violation_json(v: pz.Violation) -> dict:
    return {
        "rule": v.rule,
        "message": v.message,
        "cells": [list(cell) for cell in v.cells],
        "column": v.column,
    }


def create_app(store: SessionStore | None = None) -> FastAPI:
    app = FastAPI(title="warpmat puzzle service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions = store if store is not None else SessionStore()
    app.state.sessions = sessions

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": "malformed request body"})

    def lookup(session_id: str) -> PuzzleSession:
        try:
            return sessions.get(session_id)
        except KeyError:
            raise HTTPException(status_code=404, detail="unknown session") from None

    def posted_grid(session: PuzzleSession, body: dict) -> pz.PuzzleGrid:
        try:
            return _grid_from_cells(session.c, body.get("cells"))
        except pz.GridError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.post("/puzzle/new")
    async def new_puzzle(body: dict):
        knot = body.get("knot")
        if not isinstance(knot, str) or not knot:
            raise HTTPException(status_code=400, detail="field 'knot' must be a Gauss code or preset name")
        try:
            rules = laws.normalize_rules(body.get("rules", ("i", "ii")))
        except (ValueError, TypeError) as exc:
            raise HTTPException(status_code=400, detail=f"bad rules: {exc}") from None
        seed = body.get("seed")
        target = body.get("target_clues", 0)
        if seed is not None and not isinstance(seed, int):
            raise HTTPException(status_code=400, detail="field 'seed' must be an integer")
        if not isinstance(target, int) or target < 0:
            raise HTTPException(status_code=400, detail="field 'target_clues' must be a non-negative integer")

        if knot in pz.PRESET_CODES and seed is None:
            clues = pz.load_fixture_grid(knot)
            solution = pz.fixture_solution(knot)
        else:
            code = pz.PRESET_CODES.get(knot, knot)
            try:
                reference = parse_gauss_code(code)
            except GaussCodeError as exc:
                raise HTTPException(status_code=400, detail=f"bad Gauss code: {exc}") from None
            if reference.crossing_count > 6:
                raise HTTPException(status_code=422, detail="generation is limited to c <= 6")
            generated = pz.generate(reference, rules, seed=seed or 0, target_clues=target)
            clues, solution = generated.grid, generated.solution

        session = PuzzleSession(
            session_id=sessions.new_id(),
            c=clues.c,
            rules=rules,
            clues=clues,
            solution=solution,
            created_at=sessions.clock(),
        )
        sessions.add(session)
        return {
            "session_id": session.session_id,
            "c": session.c,
            "grid": pz.grid_to_json(clues),
        }

    @app.post("/puzzle/{session_id}/validate")
    async def validate_grid(session_id: str, body: dict):
        session = lookup(session_id)
        grid = posted_grid(session, body)
        violations = pz.validate(grid, session.rules)
        full = grid.is_full
        matches = grid == session.solution
        satisfies_all = full and not pz.validate(grid, ALL_RULES)
        solved = full and not violations and (matches or satisfies_all)
        return {
            "violations": [_violation_json(v) for v in violations],
            "solved": solved,
            "matches_solution": matches,
            "satisfies_all_rules": satisfies_all,
        }

    @app.post("/puzzle/{session_id}/hint")
    async def hint(session_id: str, body: dict):
        session = lookup(session_id)
        grid = posted_grid(session, body)
        if grid.is_full:
            raise HTTPException(status_code=409, detail="grid is already complete")
        row, col = pz.most_constrained_empty(grid, session.rules)
        return {"row": row, "col": col, "digit": session.solution.cells[row][col]}

    return app


app = create_app()
