"""Local HTTP service backing the explorer UI.

JSON over HTTP under /api/v1, no auth, CORS open (local tool).  Sessions
live in a bounded in-memory LRU store; each holds the current quiver and
an undo history.  Handlers are plain sync functions, so the framework
runs them on worker threads; a per-session lock makes concurrent
mutations on one session apply in arrival order.
"""

from __future__ import annotations

import itertools
import json
import socket
import threading
from collections import OrderedDict
from dataclasses import dataclass, field

from fastapi import Body, FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from .errors import PortInUse, QuivermutError
from .generators import (
    EXCEPTIONAL_NAMES,
    a_n_quiver,
    exceptional_quiver,
    markov_quiver,
    polygon_fan_triangulation,
    qg0_quiver,
    qgb_quiver,
)
from .mutation_class import enumerate_class
from .quiver import (
    Quiver,
    arrow_count,
    degrees,
    mutate,
    quiver_from_json,
    quiver_to_json,
)
from .surface import quiver_of

MAX_SESSIONS = 256
HISTORY_LIMIT = 512
CLASS_BUDGET_CAP = 20_000

GENERATOR_INFO = [
    {"name": "markov", "params": []},
    {"name": "qg0", "params": ["g"]},
    {"name": "qgb", "params": ["g", "b"]},
    {"name": "an", "params": ["n"]},
    {"name": "polygon", "params": ["m"]},
] + [{"name": f"exceptional:{n}", "params": []} for n in EXCEPTIONAL_NAMES]


def _build_from_generator(payload: dict) -> Quiver:
    name = payload.get("generator")
    if not isinstance(name, str):
        raise ValueError("missing generator name")

    def param(key):
        value = payload.get(key)
        if not isinstance(value, int):
            raise ValueError(f"generator {name!r} needs integer parameter {key!r}")
        return value

    if name == "markov":
        return markov_quiver()
    if name == "qg0":
        return qg0_quiver(param("g"))
    if name == "qgb":
        return qgb_quiver(param("g"), param("b"))
    if name == "an":
        return a_n_quiver(param("n"))
    if name == "polygon":
        return quiver_of(polygon_fan_triangulation(param("m")))
    if name.startswith("exceptional:"):
        return exceptional_quiver(name.split(":", 1)[1])
    raise ValueError(f"unknown generator {name!r}")


@dataclass
class _Session:
    quiver: Quiver
    history: list[Quiver] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class _SessionStore:
    def __init__(self, capacity: int):
        self.capacity = capacity
        self._sessions: OrderedDict[str, _Session] = OrderedDict()
        self._lock = threading.Lock()
        self._counter = itertools.count(1)

    def create(self, quiver: Quiver) -> str:
        with self._lock:
            sid = f"s{next(self._counter)}"
            self._sessions[sid] = _Session(quiver)
            while len(self._sessions) > self.capacity:
                self._sessions.popitem(last=False)
            return sid

    def get(self, sid: str) -> _Session:
        with self._lock:
            session = self._sessions.get(sid)
            if session is None:
                raise HTTPException(status_code=404, detail=f"no session {sid!r}")
            self._sessions.move_to_end(sid)
            return session


def _quiver_obj(q: Quiver) -> dict:
    return json.loads(quiver_to_json(q))


def _state(sid: str, session: _Session) -> dict:
    q = session.quiver
    return {
        "session": sid,
        "quiver": _quiver_obj(q),
        "arrow_count": arrow_count(q),
        "degrees": [list(degrees(q, k)) for k in range(q.n)],
        "history": len(session.history),
    }


def create_app(
    max_sessions: int = MAX_SESSIONS, history_limit: int = HISTORY_LIMIT
) -> FastAPI:
    app = FastAPI(title="quivermut", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = _SessionStore(max_sessions)

    @app.post("/api/v1/session")
    def create_session(payload: dict = Body(...)):
        try:
            if "quiver" in payload:
                quiver = quiver_from_json(payload["quiver"])
            else:
                quiver = _build_from_generator(payload)
        except (QuivermutError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sid = store.create(quiver)
        return _state(sid, store.get(sid))

    @app.get("/api/v1/session/{sid}")
    def get_session(sid: str):
        session = store.get(sid)
        with session.lock:
            return _state(sid, session)

    @app.post("/api/v1/session/{sid}/mutate")
    def mutate_session(sid: str, payload: dict = Body(...)):
        session = store.get(sid)
        vertex = payload.get("vertex")
        if not isinstance(vertex, int):
            raise HTTPException(status_code=400, detail="body needs integer 'vertex'")
        with session.lock:
            try:
                new_quiver = mutate(session.quiver, vertex)
            except QuivermutError as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            session.history.append(session.quiver)
            if len(session.history) > history_limit:
                del session.history[0]
            session.quiver = new_quiver
            return _state(sid, session)

    @app.post("/api/v1/session/{sid}/undo")
    def undo_session(sid: str):
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            session.quiver = session.history.pop()
            return _state(sid, session)

    @app.get("/api/v1/session/{sid}/degrees")
    def session_degrees(sid: str):
        session = store.get(sid)
        with session.lock:
            q = session.quiver
            degs = [list(degrees(q, k)) for k in range(q.n)]
            return {
                "session": sid,
                "degrees": degs,
                "in1out1": [k for k, d in enumerate(degs) if d == [1, 1]],
            }

    @app.get("/api/v1/generators")
    def list_generators():
        return {"generators": GENERATOR_INFO}

    @app.post("/api/v1/class")
    def class_summary(payload: dict = Body(...)):
        budget = payload.get("max_classes", CLASS_BUDGET_CAP)
        if not isinstance(budget, int) or budget < 1:
            raise HTTPException(status_code=400, detail="bad 'max_classes'")
        budget = min(budget, CLASS_BUDGET_CAP)
        try:
            if "session" in payload:
                session = store.get(payload["session"])
                with session.lock:
                    quiver = session.quiver
            elif "quiver" in payload:
                quiver = quiver_from_json(payload["quiver"])
            else:
                raise ValueError("body needs 'quiver' or 'session'")
        except (QuivermutError, ValueError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        report = enumerate_class(quiver, max_classes=budget)
        return {
            "verdict": report.verdict,
            "classes": len(report.representatives),
            "arrow_counts": sorted(set(report.arrow_counts)),
            "explored": report.explored,
            "max_classes": budget,
        }

    return app


def serve(port: int) -> None:
    """Run the service until interrupted.  Raises PortInUse up front."""
    import uvicorn

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind(("127.0.0.1", port))
    except OSError:
        raise PortInUse(f"port {port} is already in use")
    finally:
        probe.close()
    uvicorn.run(create_app(), host="127.0.0.1", port=port, log_level="warning")
