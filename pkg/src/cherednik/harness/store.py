"""Append-only directory of result records, one JSON line per file, named by content hash."""
from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .records import ResultRecord, spec_key

ENV_VAR = "CHEREDNIK_STORE"


def default_root() -> Path:
    return Path(os.environ.get(ENV_VAR, "results"))


class ResultStore:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_root()

    def path_for(self, record_hash: str) -> Path:
        return self.root / f"{record_hash}.json"

    def save(self, record: ResultRecord) -> Path:
        """Write the record unless a file with its hash already exists (same content)."""
        self.root.mkdir(parents=True, exist_ok=True)
        path = self.path_for(record.hash)
        if path.exists():
            return path
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(record.to_json() + "\n")
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return path

    def load(self, record_hash: str) -> ResultRecord:
        return ResultRecord.from_json(self.path_for(record_hash).read_text())

    def records(self):
        if not self.root.is_dir():
            return []
        out = []
        for path in sorted(self.root.glob("*.json")):
            if path.name.startswith(".tmp-"):
                continue
            out.append(ResultRecord.from_json(path.read_text()))
        return out

    def find(self, task: str, params: dict) -> ResultRecord | None:
        """A stored record for the same task and parameters, if any."""
        key = spec_key(task, params)
        for rec in self.records():
            if rec.spec_key == key:
                return rec
        return None
