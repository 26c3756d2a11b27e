"""Extremal diameters of all small k-colorable graphs versus the bound.

Sweeps every connected graph on up to 7 vertices (one per isomorphism
class), keeps those with chromatic number at most k and minimum degree
at least delta, and compares the largest diameter found to
(3 - 2/k) n/delta - 1.

Run:  python demos/05_extremal.py          (about half a minute)
"""

from clumpgraph import count_connected_graphs, extremal_csv, extremal_table

for n in range(1, 8):
    print(f"connected graphs on {n} vertices, up to isomorphism: "
          f"{count_connected_graphs(n)}")

for k in (3, 4):
    rows = extremal_table(k, 7, [1, 2, 3])
    print(f"\nk={k}: largest gaps between bound and reality")
    rows = sorted(rows, key=lambda r: r.bound - r.max_diameter)
    for r in rows[:5]:
        print(f"  n={r.n} delta={r.delta}: max diameter {r.max_diameter}, "
              f"bound {r.bound} (floor {r.bound_floor})")

print("\nfull k=3 table as CSV:")
print(extremal_csv(extremal_table(3, 6, [1, 2])))
