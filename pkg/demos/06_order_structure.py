"""
How totally ordered are tree degree sequences?
==============================================

Up to 7 nodes every pair of feasible sequences is comparable; from 8 nodes
on the order is only partial.  The covering relations draw the order as a
diagram (DOT text, layout-independent).
"""

from treemajor import check_total_order, covering_relations, hasse_diagram

for n in range(2, 11):
    report = check_total_order(n)
    if report.is_total:
        print(f"n={n:2d}: total order")
    else:
        a, b = report.witness
        print(f"n={n:2d}: NOT total; first incomparable pair {a} | {b}")
print()

n = 6
print(f"covering relations at n={n}:")
for a, b in covering_relations(n):
    print(f"  {a}  <  {b}")
print()
print(hasse_diagram(n))
