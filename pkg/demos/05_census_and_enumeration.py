"""
All trees and all degree sequences at small n
=============================================

The generator walks canonical rooted level sequences and keeps one rooting
per free tree, giving every isomorphism class exactly once.  The census of
feasible degree sequences is the set of partitions of 2(n-1) into n
positive parts; every census entry is realized by at least one class.
"""

from collections import Counter

from treemajor import (
    delta_census,
    delta_sequence,
    enumerate_trees,
    trees_with_delta,
)

print("free-tree classes by node count:")
for n in range(1, 13):
    print(f"  n={n:2d}: {len(enumerate_trees(n))}")
print()

n = 8
census = delta_census(n)
classes = enumerate_trees(n)
print(f"census at n={n} ({len(census)} sequences, {len(classes)} classes):")
by_delta = Counter(delta_sequence(t) for t in classes)
for s in census:
    print(f"  {str(s):20s} realized by {by_delta[s]} class(es)")
print()

hub = census[3]  # (5,2,2,1,1,1,1,1) in descending census order
print(f"classes with degrees {hub}:")
for t in trees_with_delta(n, hub):
    print("  ", t.sorted_edges())
