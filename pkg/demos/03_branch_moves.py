"""
Branch moves on explicit trees
==============================

A branch of a node is everything hanging off one of its edges.  Moving a
branch detaches that edge from the donor and re-attaches it at a target
node.  When the target's degree is at least the donor's (the degree rule),
the move realizes exactly one basic transfer on the degree sequence.
"""

from treemajor import (
    DegreeRuleViolation,
    branches_at,
    chain,
    compare,
    delta_sequence,
    legal_moves,
    move_branch,
    tree_to_dot,
)

t = chain(4)
print("start: path 0-1-2-3, degrees", delta_sequence(t))
for b in branches_at(t, 1):
    print(f"  branch of node 1 through {b.gateway}: members {sorted(b.members)}")
print()

# Move the branch {3} from donor 2 onto node 1 (same degree: rule holds).
moved = move_branch(t, donor=2, gateway=3, target=1)
print("after moving branch 2->3 onto node 1:")
print("  edges:", moved.sorted_edges())
print("  degrees:", delta_sequence(moved))
print("  relation:", compare(delta_sequence(t), delta_sequence(moved)))
print()

# The degree rule refuses moves onto smaller-degree nodes.
try:
    move_branch(t, donor=1, gateway=0, target=3)
except DegreeRuleViolation as exc:
    print("rule blocks a move onto a leaf:", exc)
print()

print("all degree-rule moves available on the 4-chain:")
for donor, gateway, target in legal_moves(t):
    print(f"  donor {donor}, gateway {gateway}, target {target}")
print()

print(tree_to_dot(moved, name="after_move"))
