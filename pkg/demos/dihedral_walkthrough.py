"""Dihedral group of order 14 in characteristic 2, trivial and two-dimensional lowest weights.

Run: python3 demos/dihedral_walkthrough.py
"""
from cherednik import DunklContext, dihedral_group, hilbert_L, min_generator_degrees, singular_space

G = dihedral_group(7, 2)
print("field:", G.field, " reflections:", len(G.reflections))

for tau in ("trivial", "rho:1", "rho:2", "rho:3"):
    ctx = DunklContext(G, tau=tau)
    hs = hilbert_L(ctx, 40)
    print(f"{tau:>8}: series {hs.coefficients}")
    print(f"{'':>8}  generators {min_generator_degrees(ctx, 40)}  palindromic={hs.is_palindromic()}")

# lowest singular vectors for rho:3
ctx = DunklContext(G, tau="rho:3")
for d in (1, 2):
    space = singular_space(ctx, d)
    print(f"rho:3 degree {d}: {space.dim} singular vectors")
    for v in space.basis:
        print("   ", v.to_str())
