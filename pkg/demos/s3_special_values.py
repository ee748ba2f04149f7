"""Walk through S_3 in characteristic 5 and 7: how L_c changes with c.

Numeric c values are quick; generic c is shown for p = 5 only.

Run: python3 demos/s3_special_values.py
"""
from cherednik import DunklContext, hilbert_L, min_generator_degrees, singular_space, symmetric_group


def describe(p, c):
    ctx = DunklContext(symmetric_group(3, p), c=c)
    hs = hilbert_L(ctx, 8 * p)
    gens = min_generator_degrees(ctx, 8 * p)
    print(f"p={p} c={c!s:>8}: dim L_c = {sum(hs.coefficients):>4}  generators {gens}")
    print(f"{'':22}series {hs.coefficients}")


for p in (5, 7):
    for c in (["generic"] if p == 5 else []) + list(range(p)):
        describe(p, c)
    print()

# a singular vector in degree 1 appears exactly when c = 1/3
ctx = DunklContext(symmetric_group(3, 5), c=2)
for v in singular_space(ctx, 1).basis:
    print("degree-1 singular vector at p=5, c=2:", v.to_str())
