"""The dual weighting scheme, segment by segment.

Weights depend on the segment kind of a layer (lone big layer, run of
alternating big layers, or all-small stretch), its size, and core
membership.  Every layer averages k/(3k-2), and no clump ever sees more
than total weight 1 in its neighborhood; those two facts are the whole
diameter bound.

Run:  python demos/03_weighting.py
"""

from fractions import Fraction

from clumpgraph import (
    ClumpGraph,
    assign_weights,
    core_sets,
    expected_total,
    format_weighting,
    parse_clumps,
    partition_segments,
    verify_weighting,
)

EXAMPLES = [
    ("lone big layer, k=3", "k=3 D=2\n0|1,2|0"),
    ("all-small chain, k=3", "k=3 D=2\n0|1|0"),
    ("alternating run, k=4", "k=4 D=4\n0|1,2,3|0|1,2,3|0"),
    ("mixed segments, k=3", "k=3 D=4\n0|1,2|0|1|0"),
]

for title, text in EXAMPLES:
    h = parse_clumps(text)
    prof = core_sets(h)
    part = partition_segments(h, prof)
    u = assign_weights(h, part, prof)
    rep = verify_weighting(h, u, detailed=True)
    print(f"--- {title}")
    segs = ", ".join(f"kind {s.kind} [{s.start}..{s.end}]" for s in part.segments)
    print(f"segments: {segs}")
    print(f"weights:  {format_weighting(u)}")
    print(f"total:    {rep.total} (expected {expected_total(h.k, h.depth)})")
    print(f"worst neighborhood: clump {rep.worst_clump} at {rep.worst_sum}")
    tight = [
        (i, c)
        for i, row in enumerate(rep.neighbor_sums)
        for c, s in zip(h.sorted_layers[i], row)
        if s == 1
    ]
    print(f"clumps meeting the cap exactly: {tight or 'none'}\n")
