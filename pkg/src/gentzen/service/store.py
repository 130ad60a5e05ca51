"""Session state: one proof tree per session, persisted as proof files.

Persistence is nothing but the proof file format, one file per session
in the data directory, rewritten atomically (write-then-rename) on every
successful mutation.  A restarted server picks the files up again;
revisions restart at 0 per process and only guard concurrent edits
within a running service.
"""

from __future__ import annotations

import os
import threading
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from ..prooftree import ProofTree, load, save


@dataclass
class Session:
    session_id: str
    tree: ProofTree
    locale: str
    revision: int = 0
    created: str = ""
    modified: str = ""
    lock: threading.Lock = field(default_factory=threading.Lock)


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


class SessionStore:
    def __init__(self, data_dir: Path | None = None, default_locale: str = "en"):
        self.data_dir = Path(data_dir) if data_dir is not None else None
        self.default_locale = default_locale
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        if self.data_dir is not None:
            self.data_dir.mkdir(parents=True, exist_ok=True)
            for path in sorted(self.data_dir.glob("*.json")):
                tree = load(path.read_bytes())  # SchemaError propagates: bad state dir
                sid = path.stem
                self._sessions[sid] = Session(
                    sid, tree, default_locale, created=_now(), modified=_now()
                )

    def create(self, tree: ProofTree, locale: str | None = None) -> Session:
        with self._lock:
            sid = uuid.uuid4().hex[:12]
            while sid in self._sessions:
                sid = uuid.uuid4().hex[:12]
            session = Session(
                sid, tree, locale or self.default_locale,
                created=_now(), modified=_now(),
            )
            self._sessions[sid] = session
        self._persist(session)
        return session

    def get(self, session_id: str) -> Session:
        return self._sessions[session_id]

    def all(self) -> list[Session]:
        return list(self._sessions.values())

    def commit(self, session: Session, tree: ProofTree) -> None:
        """Install a new tree; caller holds the session lock."""
        session.tree = tree
        session.revision += 1
        session.modified = _now()
        self._persist(session)

    def _persist(self, session: Session) -> None:
        if self.data_dir is None:
            return
        target = self.data_dir / f"{session.session_id}.json"
        tmp = target.with_suffix(".json.tmp")
        tmp.write_bytes(save(session.tree))
        os.replace(tmp, target)
