"""
Dominance equals reachability, exhaustively checked
===================================================

For trees, one degree sequence strictly dominates another exactly when
every tree with the smaller sequence can be rebuilt into SOME tree with the
larger one by degree-rule branch moves.  The quantifier matters: a specific
target tree can be unreachable even though its degree sequence is not.
Closed reachable sets certify such negatives.
"""

from treemajor import (
    DeltaSequence,
    canonical_code,
    certify_reachability,
    check_certificate,
    chain,
    closure_is_closed,
    delta_sequence,
    find_unreachable_pair,
    reachability_closure,
    reachable_classes,
    star,
    verify_chain_minimality,
    verify_majorization_reachability,
    standard_graph_suite,
)

for n in (6, 7, 8, 9):
    ok, _ = verify_majorization_reachability(n)
    print(f"n={n}: dominance <=> reachability over all classes: {ok}")
print()

print("extremes at n=8:")
print("  from the chain:", len(reachable_classes(chain(8))), "of 23 classes reachable")
print("  from the star :", len(reachable_classes(star(8))), "class (itself)")
print()

# A blocked specific pair: sequences strictly ordered, yet one particular
# 8-node target shape cannot be reached from one particular source.
s = DeltaSequence([4, 2, 2, 2, 1, 1, 1, 1])
s_prime = DeltaSequence([5, 2, 2, 1, 1, 1, 1, 1])
t, t_prime = find_unreachable_pair(8, s, s_prime)
print(f"source tree {t.sorted_edges()}  degrees {delta_sequence(t)}")
print(f"blocked target {t_prime.sorted_edges()}  degrees {delta_sequence(t_prime)}")
closure = reachability_closure(t)
print(f"closed reachable set has {len(closure)} classes;",
      "closed:", closure_is_closed(closure),
      "| target inside:", canonical_code(t_prime) in {canonical_code(x) for x in closure})

cert = certify_reachability(t, s_prime)
print("but the degree sequence itself IS reachable:",
      cert.trace is not None and check_certificate(cert),
      f"({len(cert.trace.moves)} move)")
print()

suite = standard_graph_suite(8, count=25)
print("chain minimal among 25 sampled connected graphs and all tree classes:",
      verify_chain_minimality(8, suite))
