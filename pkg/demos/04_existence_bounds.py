"""
Row-count bounds and parameter feasibility
==========================================

"""

# rao_rhs computes the minimum row count a mixed-alphabet array of
# strength t must have.  Everything is exact integer arithmetic.
from evnets import rao_rhs, rao_feasible, Signature, feasibility_report

sig = Signature(((2, 3), (4, 1)))          # three binary columns, one 4-ary
print("strength-2 minimum rows:", rao_rhs(sig, 2))
print("strength-3 minimum rows:", rao_rhs(sig, 3))

# The bound only sees alphabet sizes, so lumping equal sizes together
# or listing them one by one gives the same number.
print("lumped == unlumped:",
      rao_rhs([(2, 4)], 3) == rao_rhs([(2, 1)] * 4, 3))

# An array with N rows is only possible when N >= rao_rhs.
print("8 rows, four binary columns, strength 3 possible:",
      rao_feasible(8, [(2, 4)], 3))

# feasibility_report specializes the bound to net parameters (b, m, e)
# and reports every applicable necessary condition by name.
report = feasibility_report(2, 2, (1, 1, 1, 1), "net")
print("b=2 m=2 s=4:", "feasible" if report.feasible else "infeasible")
for cond in report.conditions:
    mark = "ok" if cond.satisfied else f"VIOLATED ({cond.lhs} > {cond.rhs})"
    print(" ", cond.name, mark)

# The classical threshold: unit resolution, order 2 -> at most b + 1
# coordinates.
for s in range(2, 6):
    print("b=2 s=%d:" % s,
          feasibility_report(2, 2, (1,) * s, "net").feasible)

# Sequence targets add per-resolution coordinate budgets: at most b**r
# coordinates of resolution r, and joint budgets over mixed subsets.
seq = feasibility_report(2, 6, (1, 1, 2, 2, 2), "sequence")
print("sequence (1,1,2,2,2):",
      "feasible" if seq.feasible else "infeasible",
      [c.name for c in seq.violations])
