"""The six support conditions and how their forbidden regions nest.

Each condition forbids part of the exponent box.  Weaker conditions
forbid less, and two of them are exactly the intersections of their
order-dependent refinements: dominance equals lex-largest over all
orders, and d-leading equals the seeded chain over all orders.
"""

import itertools

import nullgrid as ng

Z = ng.RingSpec.integers()
f = ng.parse_poly("x^7*y^2 + x^5*y^6 + x^2*y^4", ["x", "y"], Z)
print("f =", f.render(["x", "y"]))
print("maximal monomials:", sorted(ng.maximal_monomials(f)))
print()

# the seeded chain depends on both the seed and the variable order
for seed in sorted(f.terms):
    for order in ((0, 1), (1, 0)):
        d = ng.successively_largest(f, seed, order)
        print(f"  seed {seed} order {order}: chain gives d = {d}")
print()

# forbidden regions on a small box, one condition at a time
cap = (4, 4)
d = (2, 3)
e = (1, 2)
for cond in ng.CONDITIONS:
    kwargs = {}
    if cond in (ng.SUCCESSIVELY_LARGEST, ng.D_LEADING):
        kwargs["e"] = e
    if cond in (ng.LEX_LARGEST, ng.SUCCESSIVELY_LARGEST):
        kwargs["order"] = (0, 1)
    region = ng.forbidden_set(cond, d, cap, **kwargs)
    print(f"  {cond:22s} forbids {len(region):3d} of 25 box points")
print()

# intersection identities, checked exhaustively on this box
orders = list(itertools.permutations(range(2)))
lex = [ng.forbidden_set(ng.LEX_LARGEST, d, cap, order=o) for o in orders]
print("dominance == intersection of lex regions:",
      set.intersection(*lex) == ng.forbidden_set(ng.MAXIMAL_MONOMIAL, d, cap))
succ = [ng.forbidden_set(ng.SUCCESSIVELY_LARGEST, d, cap, e=e, order=o)
        for o in orders]
print("d-leading == intersection of seeded chains:",
      set.intersection(*succ) == ng.forbidden_set(ng.D_LEADING, d, cap, e=e))
