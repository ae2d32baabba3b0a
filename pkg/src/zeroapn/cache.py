"""On-disk JSON cache for per-instance reports.

Keys combine the command, the field (degree and modulus), the exponent and
the package version, so a new release never reuses stale results.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from . import __version__


class ReportCache:
    def __init__(self, root: str | Path | None):
        self.root = Path(root) if root else None

    def _path(self, kind: str, **key) -> Path:
        blob = json.dumps({"kind": kind, "version": __version__, **key}, sort_keys=True)
        digest = hashlib.sha256(blob.encode()).hexdigest()[:32]
        return self.root / kind / f"{digest}.json"

    def get(self, kind: str, **key) -> dict | None:
        if self.root is None:
            return None
        path = self._path(kind, **key)
        try:
            return json.loads(path.read_text())
        except (FileNotFoundError, json.JSONDecodeError):
            return None

    def put(self, kind: str, record: dict, **key) -> None:
        if self.root is None:
            return
        path = self._path(kind, **key)
        path.parent.mkdir(parents=True, exist_ok=True)
        # write-then-rename so a crashed run never leaves a torn file
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh, sort_keys=True)
        os.replace(tmp, path)
