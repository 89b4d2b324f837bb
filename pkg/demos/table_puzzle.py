"""How often can a multiplication table agree with an addition table?

Pick distinct rows a_i, distinct columns b_j, and free labels u_i, v_j.
Cell (i, j) agrees when a_i * b_j = u_i + v_j.  Agreements are zeros of
x*y - P(x) - Q(y) with linear P, Q, so no two rows can agree in two
common columns, and the count is capped by the K22-free bound.
"""

import nullgrid as ng

for s in range(1, 6):
    print(f"s={s}: cap {ng.zarankiewicz_k22_bound(s)}")
print()

# a 3x3 pair meeting the cap of 6
inst = ng.PuzzleInstance((0, 1, 2), (0, 1, 2), (0, 2, 2), (-2, 0, 0))
pattern = ng.agreement_count(inst)
print("a =", inst.a, " b =", inst.b, " u =", inst.u, " v =", inst.v)
print("multiplication table:", inst.multiplication_table())
print("addition table:      ", inst.addition_table())
print("agreements:", pattern.count, "at cells", sorted(pattern.cells))
print("K22-free:", ng.k22_check(pattern))
print()

# exhaustive search at s=2 over a small label range
result = ng.exhaustive_search(2, value_range=3)
print(f"s=2 exhaustive over range 3: best {result.pattern.count} "
      f"after {result.examined} instances")
print("  witness:", result.instance)
print()

# hill climb at s=3 finds a cap-meeting pair quickly
found = ng.local_search(3, budget=100_000, seed=0)
print(f"s=3 hill climb: best {found.pattern.count} "
      f"in {found.steps} steps, {found.restarts} restarts")
print("  witness:", found.instance)
