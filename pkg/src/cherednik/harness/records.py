"""Result records: what was run, what came out, and which checks held."""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .. import __version__

PASS, FAIL, EVIDENCE, OK = "PASS", "FAIL", "EVIDENCE", "OK"


@dataclass
class Check:
    """One named assertion.  ``evidence`` checks record data and never fail a run."""
    name: str
    holds: bool
    detail: str = ""
    evidence: bool = False

    @property
    def status(self) -> str:
        if self.evidence:
            return EVIDENCE
        return PASS if self.holds else FAIL

    def to_dict(self):
        return {"name": self.name, "status": self.status, "holds": bool(self.holds),
                "detail": self.detail}


def overall_status(checks, evidence_only: bool = False) -> str:
    statuses = [c["status"] if isinstance(c, dict) else c.status for c in checks]
    if FAIL in statuses:
        return FAIL
    if evidence_only or EVIDENCE in statuses:
        return EVIDENCE
    return PASS if statuses else OK


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


@dataclass
class ResultRecord:
    task: str
    params: dict
    status: str
    checks: list = field(default_factory=list)
    outputs: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    toolVersion: str = __version__

    def content(self) -> dict:
        """Everything that is hashed (timings are left out so reruns hash identically)."""
        return {"task": self.task, "params": self.params, "status": self.status,
                "checks": self.checks, "outputs": self.outputs, "toolVersion": self.toolVersion}

    @property
    def hash(self) -> str:
        return hashlib.sha256(canonical_json(self.content()).encode()).hexdigest()

    @property
    def spec_key(self) -> str:
        return spec_key(self.task, self.params)

    def to_dict(self) -> dict:
        d = self.content()
        d["timings"] = self.timings
        d["hash"] = self.hash
        return d

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ResultRecord":
        rec = cls(d["task"], d["params"], d["status"], d.get("checks", []), d.get("outputs", {}),
                  d.get("timings", {}), d.get("toolVersion", __version__))
        if "hash" in d and d["hash"] != rec.hash:
            raise ValueError(f"record hash mismatch: stored {d['hash'][:12]}, computed {rec.hash[:12]}")
        return rec

    @classmethod
    def from_json(cls, text: str) -> "ResultRecord":
        return cls.from_dict(json.loads(text))


def spec_key(task: str, params: dict) -> str:
    """Identifies a parameter point independently of its results (used to resume sweeps)."""
    return hashlib.sha256(canonical_json({"task": task, "params": params}).encode()).hexdigest()


def make_record(task: str, params: dict, checks, outputs: dict, timings: dict,
                evidence_only: bool = False) -> ResultRecord:
    checks = [c.to_dict() if isinstance(c, Check) else c for c in checks]
    # round-trip through JSON so the in-memory record equals the stored one
    outputs = json.loads(canonical_json(outputs))
    params = json.loads(canonical_json(params))
    return ResultRecord(task, params, overall_status(checks, evidence_only), checks, outputs,
                        {k: round(v, 4) for k, v in timings.items()})
