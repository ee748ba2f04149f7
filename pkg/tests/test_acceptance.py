"""Acceptance criteria 1-9.  Each test prints one ``CRITERION <n>: PASS|FAIL`` line.

Run ``pytest tests/test_acceptance.py -v`` (lines go straight to the terminal),
or ``python3 tests/test_acceptance.py`` for the bare list of lines.
"""
import sys

from cherednik.harness import verify
from cherednik.recursion import closed_form_p3, run_recursion

_LINES = []


def _emit(capsys, text):
    if capsys is None:
        print(text)
        return
    with capsys.disabled():
        print("\n" + text, end="")


def report(capsys, number, title, ok, details=()):
    for line in details:
        _emit(capsys, f"    {line}")
    line = f"CRITERION {number} [{title}]: {'PASS' if ok else 'FAIL'}"
    _LINES.append(line)
    _emit(capsys, line)
    assert ok, line


def _failed(rec):
    return [f"{rec.task} {rec.params}: {c['name']} ({c['detail']})"
            for c in rec.checks if c["status"] == "FAIL"]


def test_criterion_1_c_zero(capsys):
    recs = [verify("T3.1", n=n, p=p) for n, p in [(2, 2), (2, 3), (3, 3), (3, 5)]]
    details = [f"n={r.params['n']} p={r.params['p']}: {r.outputs['hilbert']['coefficients']}" for r in recs]
    bad = [x for r in recs for x in _failed(r)]
    report(capsys, 1, "T3.1 c=0 series", not bad, details + bad)


def test_criterion_2_c_inverse_n(capsys):
    recs = [verify("T3.2", n=n, p=p) for n, p in [(2, 5), (3, 5), (3, 7)]]
    details = [f"n={r.params['n']} p={r.params['p']} c={r.outputs['c']}: "
               f"{r.outputs['hilbert']['coefficients']}, dim sing(1)={r.outputs['singular_dim_1']}"
               for r in recs]
    bad = [x for r in recs for x in _failed(r)]
    report(capsys, 2, "T3.2 c=1/n series", not bad, details + bad)


def test_criterion_3_taylor_construction(capsys):
    recs = [verify("T3.4", p=5, c=1), verify("T3.4", p=7, c=3)]
    details = [f"p={r.params['p']} c={r.params['c']}: constructed {r.outputs['constructed_degrees']}, "
               f"generators {r.outputs['min_generator_degrees']}" for r in recs]
    bad = [x for r in recs for x in _failed(r)]
    ok = not bad and all(r.status == "PASS" for r in recs)
    report(capsys, 3, "T3.4 complete intersections", ok, details + bad)


def test_criterion_4_dihedral(capsys):
    recs = [verify("T4.1", m=5, p=2), verify("T4.1", m=7, p=2), verify("T4.2", m=7, p=2, a=3),
            verify("T4.4", m=5, p=2), verify("T4.4", m=7, p=2)]
    details = [f"{r.task} {r.params}: {r.status}" for r in recs]
    bad = [x for r in recs for x in _failed(r)]
    ok = not bad and all(r.status == "PASS" for r in recs)
    report(capsys, 4, "T4.1/T4.2/T4.4 dihedral vectors", ok, details + bad)


def test_criterion_5_dihedral_series_evidence(capsys):
    details = []
    done = True
    for m in (5, 7):
        rec = verify("R4.5", m=m, p=2)
        done = done and rec.status == "EVIDENCE"
        for case in rec.outputs["cases"]:
            details.append(f"m={m} {case['tau']}: computed {case['computed']} predicted {case['predicted']}")
            details.append(f"m={m} {case['tau']}: mismatched degrees <= 3p: "
                           f"{case['mismatch_degrees_up_to_3p'] or 'none'}; overall: "
                           f"{case['mismatch_degrees'] or 'none'}; generators {case['min_generator_degrees']}")
    report(capsys, 5, "R4.5 series comparison (evidence)", done, details)


def test_criterion_6_p2_generic(capsys):
    recs = [verify("T5.1", n=2), verify("T5.1", n=4)]
    details = [f"n={r.params['n']}: dim sing(2)={r.outputs['singular_dim_2']}, "
               f"series {r.outputs['hilbert']['coefficients']}, generators {r.outputs['min_generator_degrees']}"
               for r in recs]
    bad = [x for r in recs for x in _failed(r)]
    ok = not bad and all(r.outputs["singular_dim_2"] == r.params["n"] - 1 for r in recs)
    report(capsys, 6, "T5.1 p=2 generic c", ok, details + bad)


def test_criterion_7_recursion(capsys):
    details = []
    bad = []
    for p, n in [(3, 3), (5, 5)]:
        rec = verify("L5.4", p=p, n=n)
        details.append(f"(a) p={p} n={n}: singular dims below p {rec.outputs['dims']}")
        bad += _failed(rec)
    rec = verify("F12", p=5, n=5, seeds=(11, 22, 33))
    details.append(f"(b) a-vectors {rec.outputs['a_vectors']}: {rec.status}")
    bad += _failed(rec)
    for n in (3, 6):
        rec = verify("P5.9", n=n)
        details.append(f"(c) n={n}: {rec.outputs['closed_form'][:60]}...: {rec.status}")
        bad += _failed(rec)
    st = run_recursion([1, -1, 0], 3, max_steps=6, policy="heuristic")
    match = st.terminated_at == 2 and st.series() == closed_form_p3([1, -1, 0], 3)
    details.append(f"(d) terminated at m={st.terminated_at}, equals closed form = {match}")
    if not match:
        bad.append("(d)")
    report(capsys, 7, "recursion for p | n", not bad, details + bad)


def test_criterion_8_generator_sums_evidence(capsys):
    details = []
    done = True
    for p in (5, 7):
        rec = verify("C3.6", p=p)
        done = done and rec.status == "EVIDENCE" and all(r["complete"] for r in rec.outputs["table"])
        for row in rec.outputs["table"]:
            details.append(f"p={p} c={row['c']}: sum {row['sum_c']} -> {row['sum_c1']} (diff {row['diff']}), "
                           f"separators {row['separators'] or 'none'}")
        details.append(f"p={p}: unseparated c values {rec.outputs['qualifying'] or 'none'}")
    report(capsys, 8, "C3.6 generator-degree sums (evidence)", done, details)


def test_criterion_9_property_suites(capsys):
    import test_properties as props
    suites = [
        ("Dunkl commutativity", props.test_dunkl_operators_commute),
        ("commutation relation", props.test_commutation_relation),
        ("form adjointness", props.test_form_is_adjoint),
        ("J_c closure", props.test_maximal_submodule_is_closed),
        ("finite field axioms", lambda: [props.test_finite_field_axioms(p, k)
                                         for p, k in [(2, 3), (3, 2), (7, 1)]]),
        ("F_p(c) axioms", lambda: [props.test_rational_function_axioms(p) for p in (2, 5)]),
        ("rank by evaluation", props.test_generic_rank_matches_evaluations),
    ]
    details = []
    ok = True
    for name, fn in suites:
        try:
            fn()
            details.append(f"{name}: {props.INSTANCES} instances ok")
        except AssertionError as exc:
            ok = False
            details.append(f"{name}: FAILED {exc}")
    report(capsys, 9, "property suites", ok, details)


if __name__ == "__main__":
    sys.path.insert(0, __file__.rsplit("/", 1)[0])
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn(None)
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
