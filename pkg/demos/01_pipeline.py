"""From a plain graph to its clump graph, one stage at a time.

Run:  python demos/01_pipeline.py
"""

from clumpgraph import (
    SimpleGraph,
    build_clump_graph,
    format_clumps,
    layer_and_root,
    layered_colored,
    normalize_end_layer,
    saturate,
)

# A 5-cycle: the smallest graph where saturation actually adds edges.
g = SimpleGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])

lay = layer_and_root(g)
print(f"root {lay.root} has maximum eccentricity {lay.depth}")
print(f"BFS layers: {lay.layer}")

# Layer and color in one go (3 colors suffice for an odd cycle).
colored = layered_colored(g, k=3)
print(f"coloring: {colored.color}")

sat = saturate(colored)
added = sat.graph.edges - g.edges
print(f"saturation added edges {sorted(added)} without moving any layer")

# The last layer uses two colors; normalization moves the minority color
# up one layer and keeps order, depth and minimum degree intact.
norm = normalize_end_layer(sat)
last = norm.layers[norm.depth]
print(f"after normalization the last layer is {last}, "
      f"colors {{{', '.join(str(norm.color[v]) for v in last)}}}")

# Saturation must be re-established after the move before quotienting.
h = build_clump_graph(saturate(norm))
print("clump graph of the normalized result:")
print(format_clumps(h))
