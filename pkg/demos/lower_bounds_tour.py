"""Tour of the bound catalog on one small polynomial.

Every bound the library derives for x^2 - 4xy + y^2 on the grid
{0..4} x {0..4} is printed next to the true nonzero count, so you can
see which certificates are tight and which are slack.
"""

import nullgrid as ng

Z = ng.RingSpec.integers()
f = ng.parse_poly("x^2 - 4*x*y + y^2", ["x", "y"], Z)
grid = ng.GridSpec(Z, [range(5), range(5)])

print("f =", f.render(["x", "y"]))
print("grid: {0..4} x {0..4} over the integers")
print()

# the oracle first: exhaustive enumeration of all 25 points
count = ng.count_nonzeros(f, grid)
print("true nonzero count:", count.nonzeros)
print("zero set:", list(count.zero_set))
print()

# which leading-monomial hypotheses hold, and with what degree data
print("hypotheses detected:")
for row in ng.classify(f):
    mark = "holds" if row.holds else "fails"
    print(f"  {row.condition:22s} d={row.witness_d} e={row.witness_e} "
          f"order={row.order} {mark}")
print()

# every bound, checked against the count
report = ng.verify_bounds(f, grid)
print("bounds (value <= true count must hold for guaranteed rows):")
for check in report.checks:
    r = check.report
    kind = "guaranteed" if r.guaranteed else "diagnostic"
    print(f"  {r.name:30s} {str(r.value):>6s}  {kind}  slack={check.slack}")
print()
print("all guaranteed bounds sound:", report.all_guaranteed_sound)
