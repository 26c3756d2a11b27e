"""Where the weighting scheme stops working.

For k in {3, 4} every layer in a lone-big or alternating segment equals
its core and has 1 or k-1 colors, and the case-table weighting is always
feasible with the right total.  From k = 5 on, big layers with |S| just
over k/2 break that shape, and applying the table verbatim overshoots
both the total and the neighborhood cap.  The search below finds the
smallest witnesses instantly and confirms the k in {3, 4} control stays
clean.

Run:  python demos/06_scheme_breakdown.py
"""

from clumpgraph import scheme_failure_search

print("first failures at k=5 (depth 2 already suffices):")
for f in scheme_failure_search(5, 2):
    layers = "|".join(",".join(map(str, sorted(c))) for c in f.graph.layers)
    print(f"  {layers}: {f.kind} -> {f.detail}")

print("\nfailure counts by depth at k=5:")
for depth in (2, 3, 4):
    found = scheme_failure_search(5, depth)
    kinds = {}
    for f in found:
        kinds[f.kind] = kinds.get(f.kind, 0) + 1
    print(f"  depth<={depth}: {len(found)} failures {kinds}")

for k in (3, 4):
    assert scheme_failure_search(k, 6) == []
    print(f"k={k}, depth<=6: no failures (as proved)")
