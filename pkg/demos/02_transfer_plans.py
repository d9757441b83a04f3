"""
Climbing the order with unit transfers
======================================

When one sequence dominates another with the same total, a finite chain of
basic transfers (move one unit from a lower-ranked value to a
higher-or-equal-ranked one, then re-sort) connects them.  The planner picks
the first rank that falls short of the target as receiver and the first
rank that exceeds it as donor; each step strictly climbs the order.
"""

from treemajor import (
    DeltaSequence,
    compare,
    format_plan,
    majorization_gap,
    plan_transfers,
    replay,
)

examples = [
    ((3, 3, 3, 1, 1, 1, 1, 1), (5, 3, 1, 1, 1, 1, 1, 1)),
    ((2, 2, 2, 2, 2, 2, 1, 1), (5, 2, 2, 1, 1, 1, 1, 1)),
]

for src_values, tgt_values in examples:
    source = DeltaSequence(src_values)
    target = DeltaSequence(tgt_values)
    plan = plan_transfers(source, target)
    print(f"{source}  ->  {target}")
    print(f"  relation: {compare(source, target)}")
    print(f"  prefix-sum gap: {majorization_gap(source, target)}"
          f"  (an upper bound on the step count)")
    print(f"  steps: {len(plan.steps)}")
    for line in format_plan(plan).splitlines():
        print("   ", line)
    assert replay(plan) == target
    print("  replay reproduces the target exactly")
    print()

# Planning in the wrong direction, or between incomparable sequences, is
# refused with NotMajorized.
from treemajor import NotMajorized

try:
    plan_transfers(
        DeltaSequence([5, 2, 2, 1, 1, 1, 1, 1]),
        DeltaSequence([4, 4, 1, 1, 1, 1, 1, 1]),
    )
except NotMajorized as exc:
    print("refused as expected:", exc)
