"""
Realizing a feasible sequence as a tree
=======================================

Positive integers summing to 2(n-1) are exactly the degree sequences of
n-node trees.  Two constructions witness this: replaying a transfer plan
as branch moves starting from the chain, and assembling a caterpillar
directly.  Both land on the requested sequence; they need not land on the
same tree shape.
"""

from treemajor import (
    DeltaSequence,
    canonical_code,
    delta_sequence,
    format_trace,
    is_isomorphic,
    realize_direct,
    realize_from_chain,
)

target = DeltaSequence([5, 2, 2, 1, 1, 1, 1, 1])

trace = realize_from_chain(target)
print(f"chain route: {len(trace.moves)} moves")
print(format_trace(trace))
print()

direct = realize_direct(target)
print("caterpillar route:")
print("  edges:", direct.sorted_edges())
print("  degrees:", delta_sequence(direct))
print()

print("same degree sequence:", delta_sequence(trace.final) == delta_sequence(direct))
print("same tree shape:     ", is_isomorphic(trace.final, direct))
print("codes:", canonical_code(trace.final), "|", canonical_code(direct))
