"""Dodgson condensation on the binomial family Z_n(a, b) = det C(2i+2a, j+b).

Run:  python3 demos/01_condensation.py
"""
from detlab import build, det_bareiss, det_condensation, dodgson_residual

# The a = b = 0 member is det C(2i, j).  Condensation computes it from
# shifted minors of the same family; Bareiss eliminates the full matrix.
print(" n   Bareiss        condensation   2^C(n,2)   fallbacks")
for n in range(1, 11):
    res = det_condensation("I01", n, params={"a": 0, "b": 0}, with_report=True)
    d = det_bareiss(build("I01", n, {"a": 0, "b": 0}))
    print(f"{n:2d}   {d:<14d} {res.value:<14d} {2 ** (n * (n - 1) // 2):<10d} {res.fallbacks}")

# The recurrence behind condensation is an identity for every matrix, so
# its residual vanishes on every shifted cell of the grid.
grid = [{"n": n, "a": a, "b": b} for n in range(2, 6) for a in range(3) for b in range(3)]
violations, checked = dodgson_residual("I01", grid)
print(f"\nDodgson residual: {checked} cells checked, {len(violations)} nonzero")

# Off the a = b = 0 line the determinant is still a round number.
for a, b in [(1, 0), (1, 1), (2, 3)]:
    vals = [det_condensation("I01", n, params={"a": a, "b": b}) for n in range(1, 6)]
    print(f"a={a} b={b}: {vals}")
