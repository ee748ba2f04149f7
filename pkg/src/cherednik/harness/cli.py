"""Command line interface: ``cherednik <command> ...``.

Exit status is 0 when every check passed or only produced evidence, 1 when
any check failed and 2 on usage errors (bad arguments or parameters outside
a statement's hypotheses).
"""
from __future__ import annotations

import argparse
import inspect
import sys

from ..fields import FieldError, InvalidInput
from .records import FAIL, ResultRecord
from .store import ResultStore
from .experiments import ExperimentSpec, run_point, sweep
from .verify import VERIFIERS, verify


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _degrees(text: str) -> list[int]:
    if "-" in text.strip("-"):
        lo, hi = text.split("-", 1)
        return list(range(int(lo), int(hi) + 1))
    return _int_list(text)


def _c_value(text: str):
    text = text.strip()
    if text.lower() in ("generic", "c"):
        return "generic"
    try:
        return int(text)
    except ValueError:
        return text


def _add_common(sp, degree_default=30):
    sp.add_argument("--group", required=True, help="Sn:<n> or Dm:<m>")
    sp.add_argument("--p", type=int, required=True, help="characteristic")
    sp.add_argument("--c", default="generic", help="'generic', an integer, a/b, or a field element")
    sp.add_argument("--tau", default="trivial", help="trivial or rho:<a> (dihedral groups)")
    sp.add_argument("--max-degree", type=int, default=degree_default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cherednik", description=__doc__.splitlines()[0])
    ap.add_argument("--store", default=None, help="result directory (default $CHEREDNIK_STORE or ./results)")
    ap.add_argument("--no-store", action="store_true", help="do not write result records")
    ap.add_argument("--json", action="store_true", help="print the full record as JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", help="graded dimensions of L_c")
    _add_common(h)
    h.add_argument("--method", choices=["tower", "beta"], default="tower")
    h.add_argument("--min-gens", action="store_true", help="also report minimal generator degrees")

    g = sub.add_parser("min-gens", help="degrees of minimal generators of J_c")
    _add_common(g)

    s = sub.add_parser("singular-scan", help="singular vectors in given degrees")
    _add_common(s)
    s.add_argument("--degree", required=True, type=_degrees, help="a degree, a list 1,2 or a range 1-4")

    v = sub.add_parser("verify", help="run a theorem check")
    v.add_argument("id", choices=sorted(VERIFIERS))
    for name in ("n", "p", "m", "k", "order"):
        v.add_argument(f"--{name}", type=int)
    v.add_argument("--a", help="an integer, or a comma-separated vector")
    v.add_argument("--c", help="an integer, 'generic', or a comma-separated list")
    v.add_argument("--max-degree", type=int)

    r = sub.add_parser("recursion", help="order-by-order construction of degree-p singular vectors")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--a", type=_int_list, required=True, help="comma-separated, e.g. 1,-1,0")
    r.add_argument("--policy", choices=["never", "heuristic"], default="never")
    r.add_argument("--steps", type=int, default=6)

    w = sub.add_parser("sweep", help="run an experiment spec (JSON file)")
    w.add_argument("--spec", required=True)
    w.add_argument("--workers", type=int, default=1)
    w.add_argument("--no-resume", action="store_true", help="recompute points already in the store")
    return ap


# ---------------------------------------------------------------------------
# printing

def _print_record(rec: ResultRecord, as_json: bool):
    if as_json:
        print(rec.to_json())
        return
    print(f"{rec.task}  status={rec.status}  hash={rec.hash[:16]}")
    tasks = rec.params.get("tasks", [])
    hidden = {"tasks", "verifyParams"}
    if "recursion" not in tasks:
        hidden |= {"a", "policy", "steps"}
    else:
        hidden |= {"maxDegree", "c", "tau", "method"}
    if "hilbert" not in tasks:
        hidden.add("method")
    for key, val in rec.params.items():
        if key in hidden or val in (None, [], {}):
            continue
        print(f"  {key:<12} {val}")
    out = rec.outputs
    if "hilbert" in out and isinstance(out["hilbert"], dict):
        hs = out["hilbert"]
        print(f"  hilbert      {hs['coefficients']}  complete={hs['complete']}"
              f"  palindromic={hs['palindromic']}  ci={hs['ci_degrees']}")
    if "min_generator_degrees" in out and isinstance(out["min_generator_degrees"], dict):
        mg = out["min_generator_degrees"]
        print(f"  generators   {mg['degrees']}  complete={mg['complete']}")
    if "singular_scan" in out:
        print(f"  {'degree':>6}  dim  basis")
        for d, row in out["singular_scan"].items():
            basis = "; ".join(row["basis"]) if row["basis"] else "-"
            print(f"  {d:>6}  {row['dim']:>3}  {basis}")
    if "recursion" in out:
        st = out["recursion"]
        print(f"  terminated at m = {st['terminatedAt']}  failure = {st['failure']}")
        for m, step in enumerate(st["steps"]):
            extra = f"  + added {step['added']}" if step["added"] != "0" else ""
            print(f"  F_{m} = {step['F']}{extra}")
    for chk in rec.checks:
        detail = f"  ({chk['detail']})" if chk["detail"] else ""
        if chk["status"] == "EVIDENCE":
            detail = (": holds" if chk["holds"] else ": does not hold") + detail
        print(f"  [{chk['status']:<8}] {chk['name']}{detail}")
    for key, val in out.items():
        if key in ("hilbert", "min_generator_degrees", "singular_scan", "recursion"):
            continue
        if key == "table" and isinstance(val, list):
            print("  table:")
            for row in val:
                print("    " + "  ".join(f"{k}={v}" for k, v in row.items()))
        elif key == "cases" and isinstance(val, list):
            for case in val:
                print(f"  {case['tau']}: computed {case['computed']}")
                print(f"  {' ' * len(case['tau'])}  predicted {case['predicted']}"
                      f"  generators {case['min_generator_degrees']}")
        else:
            print(f"  {key}: {val}")


# ---------------------------------------------------------------------------
# commands

def _point(args, tasks, **extra) -> dict:
    spec = ExperimentSpec(group=args.group, p=args.p, tau=args.tau, c=_c_value(args.c),
                          maxDegree=args.max_degree, tasks=tasks, **extra)
    spec.validate()
    return spec.points()[0]


def _verify_params(args) -> dict:
    fn = VERIFIERS[args.id]
    accepted = set(inspect.signature(fn).parameters)
    params = {}
    for name in ("n", "p", "m", "k", "order"):
        val = getattr(args, name)
        if val is not None:
            params[name] = val
    if args.a is not None:
        params["a"] = _int_list(args.a) if "," in args.a else int(args.a)
    if args.c is not None:
        if "cs" in accepted:
            params["cs"] = [_c_value(x) for x in args.c.split(",")]
        else:
            params["c"] = _c_value(args.c)
    if args.max_degree is not None:
        params["max_degree"] = args.max_degree
    unknown = set(params) - accepted
    if unknown:
        raise InvalidInput(f"{args.id} does not take {', '.join('--' + u.replace('_', '-') for u in sorted(unknown))}")
    return params


def _run(args) -> list[ResultRecord]:
    if args.command == "hilbert":
        tasks = ["hilbert"] + (["min-gens"] if args.min_gens else [])
        return [run_point(_point(args, tasks, method=args.method))]
    if args.command == "min-gens":
        return [run_point(_point(args, ["min-gens"]))]
    if args.command == "singular-scan":
        return [run_point(_point(args, ["singular-scan"], degree=args.degree))]
    if args.command == "recursion":
        spec = ExperimentSpec(group=f"Sn:{args.n}", p=args.p, c="generic", tasks=["recursion"],
                              a=args.a, policy=args.policy, steps=args.steps)
        spec.validate()
        return [run_point(spec.points()[0])]
    if args.command == "verify":
        return [verify(args.id, **_verify_params(args))]
    if args.command == "sweep":
        spec = ExperimentSpec.load(args.spec)
        store = None if args.no_store else ResultStore(args.store)
        return sweep(spec, workers=args.workers, store=store, resume=not args.no_resume)
    raise InvalidInput(f"unknown command {args.command}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        records = _run(args)
    except (InvalidInput, FieldError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    store = None if args.no_store else ResultStore(args.store)
    for rec in records:
        if store is not None and args.command != "sweep":
            store.save(rec)
        _print_record(rec, args.json)
    if store is not None:
        print(f"records written to {store.root}", file=sys.stderr)
    return 1 if any(rec.status == FAIL for rec in records) else 0


if __name__ == "__main__":
    sys.exit(main())
