"""Trimming a polynomial to a grid and reading coefficients off values.

Reducing modulo the per-variable annihilators leaves a representative
with partial degrees below the set sizes and identical values on every
grid point.  The same machinery runs in reverse: interpolation-style
multipliers recover a top coefficient from nothing but grid values.
"""

import nullgrid as ng

F7 = ng.RingSpec.prime_field(7)
grid = ng.GridSpec(F7, [(0, 1, 2), (0, 1, 2)])

f = ng.parse_poly("x^4*y + 3*x*y^3 + 2*x + 6", ["x", "y"], F7)
g = ng.trim(f, grid)
print("f       =", f.render(["x", "y"]))
print("trim(f) =", g.render(["x", "y"]))

# same values everywhere on the grid
agree = all(f.eval_raw(p) == g.eval_raw(p) for p in grid.points())
print("values agree on all", len(list(grid.points())), "grid points:", agree)
print()

# multipliers: weights g(a) with sum g(a) a^k = 0 for k < d, 1 for k = d
m = ng.vandermonde_multipliers(F7, (0, 1, 2), 2)
print("multipliers on {0,1,2} mod 7 for degree 2:", m.values)
for k in range(3):
    s = sum(gv * a**k for gv, a in zip(m.values, m.elements)) % 7
    print(f"  sum g(a) a^{k} = {s}")
print()

# coefficient of a maximal monomial straight from grid values
h = ng.parse_poly("x^2*y^2 + 3*x*y + 5", ["x", "y"], F7)
values = ng.grid_values(h, grid)
c = ng.coefficient_via_grid(values, grid, (2, 2))
print("h =", h.render(["x", "y"]))
print("coefficient of x^2*y^2 recovered from 9 values:", c.value)
print("stored coefficient:", h.coefficient((2, 2)).value)
