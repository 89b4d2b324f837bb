"""Randomized identity testing on expression DAGs.

Two expressions are compared without expanding them: evaluate the
difference at random points from a box whose side exceeds the degree.
Agreement on every trial bounds the failure probability by
(degree / samples) per trial; a single nonzero value is a proof of
difference, and the witness point is printed.
"""

import nullgrid as ng

F101 = ng.RingSpec.prime_field(101)

# equal as polynomials, structurally different as DAGs
g1 = ng.parse_dag("(x + y)^19", ["x", "y"], F101)
g2 = ng.parse_dag("(y + x)^19", ["x", "y"], F101)
v = ng.identity_test(g1, g2, samples_per_var=100, trials=7, seed=0)
print("(x+y)^19 vs (y+x)^19:", v.status)
print("  degree bound", v.degree_bound, "samples", v.samples_per_var)
print("  failure bound", v.failure_bound, f"~ {float(v.failure_bound):.2e}")
print()

# differ in one coefficient: a witness appears almost immediately
g3 = ng.parse_dag("(x + y)^19 + x*y", ["x", "y"], F101)
v = ng.identity_test(g1, g3, samples_per_var=100, trials=7, seed=0)
print("(x+y)^19 vs (x+y)^19 + xy:", v.status)
print("  witness point", v.point, "difference value", v.value)
print()

# cancellation: the structural degree bound stays at 2, the difference
# expands to the zero polynomial, and the verdict reflects the trials
g4 = ng.parse_dag("x^2 - x^2", ["x"], F101)
g5 = ng.parse_dag("0", ["x"], F101)
v = ng.identity_test(g4, g5, samples_per_var=50, trials=4, seed=1)
print("x^2 - x^2 vs 0:", v.status, "with failure bound", v.failure_bound)
print("expanded difference is zero:",
      ng.expand_dag(ng.dag_difference(g4, g5)).is_zero)
