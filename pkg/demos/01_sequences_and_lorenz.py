"""
Comparing degree sequences
==========================

A tree on n nodes has positive node degrees summing to 2(n-1).  Sorted
descending, such sequences are compared by prefix-sum dominance: one
sequence sits below another when every prefix sum is no larger.  The
comparison is four-valued because prefix sums can cross.
"""

from treemajor import (
    CONVEX_TEST_FAMILY,
    compare,
    convex_functional,
    lorenz_curve,
    parse_sequence,
    prefix_sums,
)

hub = parse_sequence("5,2,2,1,1,1,1,1")
double = parse_sequence("4,4,1,1,1,1,1,1")
chain8 = parse_sequence("2,2,2,2,2,2,1,1")

print("hub    :", hub, "prefix sums", prefix_sums(hub))
print("double :", double, "prefix sums", prefix_sums(double))
print("chain-8:", chain8, "prefix sums", prefix_sums(chain8))
print()

# The hub tree concentrates degree faster at rank 1, the double-4 tree at
# rank 2 -- their prefix sums cross, so neither dominates.
print("hub vs double :", compare(hub, double))
print("chain vs hub  :", compare(chain8, hub))
print("chain vs double:", compare(chain8, double))
print()

# Lorenz curves make the same comparison geometric: dominance means one
# polyline lies above the other.  Coordinates are exact rationals.
for name, seq in [("hub", hub), ("chain-8", chain8)]:
    curve = lorenz_curve(seq, normalized=True)
    pts = "  ".join(f"({x},{y})" for x, y in curve.points)
    print(f"normalized Lorenz curve of {name}: {pts}")
print()

# Dominance is equivalent to monotonicity of summed convex functions; the
# library ships a small witness family.
print("convex functionals (chain-8 vs hub):")
for name, phi in CONVEX_TEST_FAMILY:
    lo = convex_functional(chain8, phi)
    hi = convex_functional(hub, phi)
    print(f"  sum {name:12s} {lo:>4} <= {hi:<4}")
