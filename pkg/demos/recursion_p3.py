"""Building a degree-3 singular vector for S_3 over F_3(c) order by order in c.

Run: python3 demos/recursion_p3.py
"""
from cherednik import DunklContext, closed_form_p3, is_singular, run_recursion, symmetric_group

a = [1, -1, 0]
for policy in ("never", "heuristic"):
    st = run_recursion(a, 3, max_steps=5, policy=policy)
    print(f"policy={policy}: terminated at m = {st.terminated_at}")
    for m, step in enumerate(st.steps):
        extra = f"   (added {step.added.to_str()})" if not step.added.is_zero() else ""
        print(f"   F_{m} = {step.F.to_str()}{extra}")

F = closed_form_p3(a, 3)
ctx = DunklContext(symmetric_group(3, 3))
print("closed form:", F.to_str())
print("singular over F_3(c):", is_singular(ctx, F))
