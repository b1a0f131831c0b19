"""The verification harness: suites, grids, budgets, and mutations.

Every law the package claims is re-checked exhaustively over windows by
sixteen suites, S1 through S16.  The mutation check corrupts one
constant of the product or involution at a time and demands that some
suite notices, which keeps the suites honest.
"""

from resilat import AlgebraParams
from resilat.harness import (
    MUTATIONS,
    SUITES,
    mutation_check,
    run_grid,
    run_suite,
)

P = AlgebraParams(2, 3)

print("the registry:")
for sid, entry in SUITES.items():
    print(f"  {sid:>3} {entry.title}")

print("\none suite at one point:")
print(" ", run_suite("S1", P).text_line())

print("\nthe residuation suite across the whole grid:")
for report in run_grid(["S1"]):
    print(" ", report.text_line())

print("\na corrupted product constant, caught in the act:")
report = run_suite("S5", P, ops=MUTATIONS["mul-case2-const"])
print(" ", report.text_line())

print("\nwhich suites catch which mutation:")
for name, sids in mutation_check().items():
    print(f"  {name:>18}: {', '.join(sids)}")
