"""When bounds are exact, and when a diagnostic one lies.

First a family of subset products that meets the product bound with
slack zero on any grid.  Then a polynomial over F_5 with a maximal
support monomial (2, 2) that would promise 9 nonzeros if it dominated
the whole support; it does not, the true count is 8, and the verifier
flags the miss while the guaranteed catalog stays sound.
"""

import nullgrid as ng

F5 = ng.RingSpec.prime_field(5)

# part 1: exact tightness
grid = ng.GridSpec(F5, [range(5), range(5)])
for d in [(1, 1), (2, 3), (4, 0)]:
    f = ng.tightness_family(grid, d)
    got = ng.count_nonzeros(f, grid, collect_zeros=False).nonzeros
    want = (5 - d[0]) * (5 - d[1])
    print(f"d={d}: subset product has {got} nonzeros, bound says {want}")
print()

# part 2: the diagnostic miss
# f factors as x*y*(y - x)*(y - 3x): four lines through the origin
f = ng.parse_poly("x*y^3 + x^2*y^2 + 3*x^3*y", ["x", "y"], F5)
print("f =", f.render(["x", "y"]))

count = ng.count_nonzeros(f, grid, collect_zeros=False)
print("true nonzeros on the full 5x5 grid:", count.nonzeros)

report = ng.verify_bounds(f, grid)
print("guaranteed catalog sound:", report.all_guaranteed_sound)
for check in report.checks:
    r = check.report
    if not check.sound:
        print(f"  diagnostic miss: {r.name} claimed {r.value} at d={r.witness_d}, "
              f"slack {check.slack}")
    elif r.name == "gen-alon-furedi":
        print(f"  {r.name} gives {r.value}: exact here, slack {check.slack}")

# the monomial (2, 2) is maximal in the support but not dominating, so
# the product claim (5-2)*(5-2) = 9 was never a theorem for this f
