"""Experiment specifications, single parameter points and parallel sweeps."""
from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from ..contraform import generator_counts, hilbert_L, singular_space
from ..dunkl import DunklContext
from ..fields import InvalidInput
from ..groups import parse_group
from ..recursion import run_recursion
from .records import Check, ResultRecord, make_record
from .store import ResultStore
from .verify import VERIFIERS, verify

BASIC_TASKS = ("hilbert", "min-gens", "singular-scan", "recursion")


@dataclass
class ExperimentSpec:
    """What to compute, for which group, representation and parameter values.

    ``c`` is ``"generic"``, a single value, a list of values, or ``"sweep"``
    (every element of F_p).  ``tasks`` is a subset of ``hilbert``,
    ``min-gens``, ``singular-scan``, ``recursion`` and ``verify:<id>``.
    """
    group: str
    p: int
    tau: str = "trivial"
    c: object = "generic"
    maxDegree: int = 30
    tasks: list = field(default_factory=lambda: ["hilbert"])
    method: str = "tower"
    degree: object = None
    a: list | None = None
    policy: str = "never"
    steps: int = 6
    verifyParams: dict = field(default_factory=dict)

    @classmethod
    def from_dict(cls, d: dict) -> "ExperimentSpec":
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise InvalidInput(f"unknown spec fields: {sorted(extra)}")
        spec = cls(**d)
        spec.validate()
        return spec

    @classmethod
    def load(cls, path) -> "ExperimentSpec":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def c_values(self) -> list:
        if self.c == "sweep":
            return list(range(self.p))
        if isinstance(self.c, list):
            return list(self.c)
        return [self.c]

    def validate(self):
        if not self.tasks:
            raise InvalidInput("at least one task is required")
        group = parse_group(self.group, self.p)
        for t in self.tasks:
            if t.startswith("verify:"):
                if t[len("verify:"):] not in VERIFIERS:
                    raise InvalidInput(f"unknown verify id in task {t!r}")
            elif t not in BASIC_TASKS:
                raise InvalidInput(f"unknown task {t!r}")
        if "recursion" in self.tasks:
            if group.family != "Sn" or group.n % self.p:
                raise InvalidInput("recursion needs S_n with p dividing n")
            if self.a is None or len(self.a) != group.n:
                raise InvalidInput("recursion needs an a-vector with n entries")
        if "singular-scan" in self.tasks and self.degree is None:
            raise InvalidInput("singular-scan needs a degree")
        if self.tau != "trivial" and group.family != "Dm":
            raise InvalidInput("non-trivial tau is available for dihedral groups only")
        if self.maxDegree < 1:
            raise InvalidInput("maxDegree must be positive")

    def points(self) -> list[dict]:
        base = asdict(self)
        out = []
        for c in self.c_values():
            pt = dict(base)
            pt["c"] = c
            out.append(json.loads(json.dumps(pt, sort_keys=True)))
        return out


def _scan_degrees(degree):
    if isinstance(degree, int):
        return [degree]
    return [int(d) for d in degree]


def run_point(point: dict) -> ResultRecord:
    """Run every task of one parameter point and bundle the results in a single record."""
    timings = {}
    outputs = {}
    checks = []
    needs_ctx = any(t in ("hilbert", "min-gens", "singular-scan") for t in point["tasks"])
    ctx = None
    if needs_ctx:
        group = parse_group(point["group"], point["p"])
        ctx = DunklContext(group, tau=point["tau"], c=point["c"])
    for task in point["tasks"]:
        t0 = time.perf_counter()
        if task == "hilbert":
            outputs["hilbert"] = hilbert_L(ctx, point["maxDegree"], method=point["method"]).to_dict()
        elif task == "min-gens":
            counts = generator_counts(ctx, point["maxDegree"])
            degs = [d for d, k in sorted(counts.items()) for _ in range(k)]
            complete = hilbert_L(ctx, point["maxDegree"]).complete
            outputs["min_generator_degrees"] = {"degrees": degs, "complete": complete}
        elif task == "singular-scan":
            scan = {}
            for d in _scan_degrees(point["degree"]):
                sp = singular_space(ctx, d)
                scan[str(d)] = {"dim": sp.dim, "basis": [v.to_str() for v in sp.basis]}
            outputs["singular_scan"] = scan
        elif task == "recursion":
            st = run_recursion(point["a"], point["p"], max_steps=point["steps"], policy=point["policy"])
            outputs["recursion"] = st.to_dict()
        else:
            vid = task[len("verify:"):]
            rec = verify(vid, **point.get("verifyParams", {}))
            outputs[task] = rec.outputs
            checks.extend({**c, "name": f"{vid}: {c['name']}"} for c in rec.checks)
        timings[task] = time.perf_counter() - t0
    return make_record("point", point, checks, outputs, timings)


def _failure_record(point: dict, exc: Exception) -> ResultRecord:
    return make_record("point", point, [Check("computation finished", False, f"{type(exc).__name__}: {exc}")],
                       {}, {})


def _run_safe(point):
    try:
        return run_point(point)
    except InvalidInput as exc:
        return _failure_record(point, exc)


def sweep(spec: ExperimentSpec | dict, workers: int = 1, store: ResultStore | None = None,
          resume: bool = True) -> list[ResultRecord]:
    """One record per parameter point, in the order of ``spec.points()``.

    Points already present in ``store`` are loaded instead of recomputed;
    new records are saved as soon as they are available.
    """
    if isinstance(spec, dict):
        spec = ExperimentSpec.from_dict(spec)
    else:
        spec.validate()
    points = spec.points()
    results: list = [None] * len(points)
    todo = []
    for i, pt in enumerate(points):
        found = store.find("point", pt) if (store is not None and resume) else None
        if found is not None:
            results[i] = found
        else:
            todo.append(i)
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for i, rec in zip(todo, pool.map(_run_safe, [points[i] for i in todo])):
                results[i] = rec
                if store is not None:
                    store.save(rec)
    else:
        for i in todo:
            results[i] = _run_safe(points[i])
            if store is not None:
                store.save(results[i])
    return results
