"""Existence on the smallest grids the theory allows.

A d-leading monomial with coefficient prescribed by the seed forces a
nonzero point on any grid with |S_i| = d_i + 1.  These grids are as
small as the guarantee gets: one point fewer in any direction and the
claim fails, as the vanishing products below show.
"""

import random

import nullgrid as ng

F7 = ng.RingSpec.prime_field(7)

f = ng.parse_poly("x*y + x^4 + y^2", ["x", "y"], F7)
print("f =", f.render(["x", "y"]))
print("(1,1) is (4,2)-leading:", ng.is_d_leading(f, (1, 1), (4, 2)))

# |S_1| = 5, |S_2| = 3: the guarantee is a single nonzero point
grid = ng.GridSpec(F7, [(0, 1, 2, 3, 4), (0, 1, 2)])
count = ng.count_nonzeros(f, grid, collect_zeros=False)
print("nonzeros on the 5x3 grid:", count.nonzeros, "(guarantee: at least 1)")
print()

# sharpness: a polynomial built to vanish on an entire d_i + 1 size grid
g = ng.vanishing_poly(grid, 0) * ng.parse_poly("y", ["x", "y"], F7)
print("g = (prod over S_1 of (x - a)) * y")
print("nonzeros of g on the same grid:",
      ng.count_nonzeros(g, grid, collect_zeros=False).nonzeros)
print("no contradiction: every d-leading witness of g needs d_1 = 5 > 4,")
print("so the 5x3 grid is too small for any guarantee to apply")
for row in ng.classify(g):
    if row.condition == ng.D_LEADING and row.holds:
        print("  d-leading witness d =", row.witness_d, "e =", row.witness_e)
print()

# random stress: seeded chains always land a nonzero on their minimal grid
rng = random.Random(5)
hits = 0
trials = 0
while trials < 300:
    h = ng.random_polynomial(2, (3, 3), 0.5, F7, seed=rng.randrange(10**9))
    e = rng.choice(sorted(h.terms))
    d = ng.successively_largest(h, e, (0, 1))
    if not ng.is_d_leading(h, e, d):
        continue
    sets = [tuple(rng.sample(range(7), di + 1)) for di in d]
    c = ng.count_nonzeros(h, ng.GridSpec(F7, sets), collect_zeros=False)
    trials += 1
    if c.nonzeros >= 1:
        hits += 1
print(f"random minimal grids: {hits}/{trials} had a nonzero point")
