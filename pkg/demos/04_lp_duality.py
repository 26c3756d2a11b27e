"""The two linear programs over a clump graph, and the bound they imply.

Minimizing the blow-up order subject to a degree demand and maximizing
the total dual weight subject to unit neighborhood caps are formal LP
duals (the derived adjacency matrix is symmetric).  The scheme weighting
is one feasible dual point, so the exact optimum can only be larger, and
any feasible dual total converts into a diameter bound by weak duality.

Run:  python demos/04_lp_duality.py
"""

from clumpgraph import (
    assign_weights,
    build_dual_lp,
    build_primal_lp,
    derive_bound_from_weighting,
    diameter_bound,
    duality_report,
    parse_clumps,
    simplex_solve,
)

h = parse_clumps("k=3 D=4\n0|1,2|0|1|0")
delta = 2

primal = simplex_solve(build_primal_lp(h, delta))
dual = simplex_solve(build_dual_lp(h, delta))
print(f"min blow-up order  (delta={delta}): {primal.value}")
print(f"  at fractional weights {[str(x) for x in primal.assignment]}")
print(f"max dual weight    (delta={delta}): {dual.value}")
print(f"  at clump weights      {[str(x) for x in dual.assignment]}")
assert primal.value == dual.value

rec = duality_report(h, delta)
print(f"scheme value delta*(depth+1)*k/(3k-2) = {rec.scheme_value} "
      f"<= optimum {rec.dual}")

# weak duality in action: concrete blow-up weights against the scheme dual
weighted = h.with_weights({cl: 2 for cl in h.clumps()} | {(0, 0): 1})
u = assign_weights(h)
ok = derive_bound_from_weighting(weighted, u)
n = sum(sum(ws) for ws in weighted.weights)
print(f"\nblow-up with order {n}: depth {h.depth} <= "
      f"bound {diameter_bound(n, delta, 3)} -> {ok}")
