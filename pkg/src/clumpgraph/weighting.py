"""Exact dual weightings of strongly canonical clump graphs.

Every clump gets a nonnegative rational weight decided by its layer's
segment kind, layer size, and core membership.  The assignment makes each
layer of an all-small segment weigh exactly k/(3k-2), each kind-1 segment
3k/(3k-2), and each kind-2 segment with s big layers (2s+1)k/(3k-2), so
the whole graph weighs (depth+1) * k/(3k-2).  Feasibility means every
clump's neighborhood weighs at most 1; combined with blow-up weights this
yields the diameter bound (3 - 2/k) n/delta - 1 by weak LP duality.

All arithmetic is exact; nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .clumps import ClumpGraph, ClumpError
from .structure import CoreProfile, SegmentPartition, core_sets, partition_segments


@dataclass(frozen=True)
class DualWeighting:
    """Rational weight per clump; values align with sorted layer colors."""

    graph: ClumpGraph
    values: tuple[tuple[Fraction, ...], ...]

    def value(self, i: int, c: int) -> Fraction:
        return self.values[i][self.graph.sorted_layers[i].index(c)]

    def total(self) -> Fraction:
        return sum((w for ws in self.values for w in ws), Fraction(0))

    def layer_total(self, i: int) -> Fraction:
        return sum(self.values[i], Fraction(0))

    def neighbor_sum(self, i: int, c: int) -> Fraction:
        return sum(
            (self.value(j, b) for j, b in self.graph.neighbors(i, c)), Fraction(0)
        )

    def items(self):
        for i, layer in enumerate(self.graph.sorted_layers):
            for c, w in zip(layer, self.values[i]):
                yield (i, c), w


@dataclass(frozen=True)
class WeightingReport:
    total: Fraction
    feasible: bool
    worst_clump: tuple[int, int]
    worst_sum: Fraction
    # per-clump neighbor sums aligned with sorted layer colors; only
    # populated on request
    neighbor_sums: tuple[tuple[Fraction, ...], ...] | None = None


@dataclass(frozen=True)
class BoundCertificate:
    """Average layer weight and additive constant backing a diameter bound.

    The certified bound is n/(delta * avg) - constant/avg; the scheme's
    certificate has constant = avg, i.e. a flat -1.
    """

    avg_layer_weight: Fraction
    additive_constant: Fraction
    k: int

    def __post_init__(self):
        if self.avg_layer_weight <= 0 or self.additive_constant < 0:
            raise ClumpError("certificate needs avg > 0 and constant >= 0")

    def bound(self, n: int, delta: int) -> Fraction:
        return Fraction(n, delta) / self.avg_layer_weight - (
            self.additive_constant / self.avg_layer_weight
        )


@lru_cache(maxsize=None)
def _case_table(k: int):
    d = 3 * k - 2
    return {
        "kind1_wide": Fraction(2, d),
        "kind1_other": Fraction(k + 2, 2 * d),
        "kind2_wide": Fraction(1, 2 * (k - 1)),
        "kind2_inner": Fraction(k + 2, 2 * d),
        "kind2_edge": Fraction(3 * k + 2, 4 * d),
        "layer_quota": Fraction(k, d),
    }


def scheme_certificate(k: int) -> BoundCertificate:
    quota = _case_table(k)["layer_quota"]
    return BoundCertificate(quota, quota, k)


def _scheme_values(
    h: ClumpGraph, partition: SegmentPartition, profile: CoreProfile
) -> tuple[tuple[Fraction, ...], ...]:
    """The case table applied verbatim, any k >= 3."""
    k = h.k
    tab = _case_table(k)
    d = 3 * k - 2
    out = []
    for seg in partition.segments:
        for i in range(seg.start, seg.end + 1):
            layer = h.sorted_layers[i]
            size = len(layer)
            if seg.kind == 1:
                w = tab["kind1_wide"] if size == k - 1 else tab["kind1_other"]
                out.append((w,) * size)
            elif seg.kind == 2:
                if size == k - 1:
                    w = tab["kind2_wide"]
                elif size == 1 and seg.start < i < seg.end:
                    w = tab["kind2_inner"]
                else:
                    w = tab["kind2_edge"]
                out.append((w,) * size)
            else:
                if 2 * size <= k:
                    out.append((Fraction(k, d * size),) * size)
                else:
                    core = profile.core[i]
                    spare = Fraction(k - 2 * len(core), d * (size - len(core)))
                    out.append(
                        tuple(tab["kind1_wide"] if c in core else spare for c in layer)
                    )
    return tuple(out)


def assign_weights(
    h: ClumpGraph,
    partition: SegmentPartition | None = None,
    profile: CoreProfile | None = None,
) -> DualWeighting:
    """Scheme weights for k in {3, 4} (elsewhere the scheme can fail; use
    the failure search to apply it speculatively)."""
    if h.k not in (3, 4):
        raise ClumpError(f"unsupported k={h.k}: the weighting scheme covers k in {{3, 4}}")
    prof = profile if profile is not None else core_sets(h)
    part = partition if partition is not None else partition_segments(h, prof)
    if part.segments[-1].end != h.depth:
        raise ClumpError("partition does not match the clump graph")
    return DualWeighting(h, _scheme_values(h, part, prof))


def verify_weighting(
    h: ClumpGraph, u: DualWeighting, detailed: bool = False
) -> WeightingReport:
    """Total weight and exact feasibility of the neighbor-sum condition.

    Works over a common denominator so the per-clump checks are integer
    comparisons; results are reduced back to rationals.  With ``detailed``
    the report also carries every clump's exact neighbor sum.
    """
    if u.graph.layers != h.layers or u.graph.k != h.k:
        raise ClumpError("weighting belongs to a different clump graph")
    depth = h.depth
    scale = lcm(*(w.denominator for ws in u.values for w in ws))
    nums = [
        [w.numerator * (scale // w.denominator) for w in ws] for ws in u.values
    ]
    layer_tot = [sum(row) for row in nums]
    per_layer_by_color = [
        dict(zip(h.sorted_layers[i], nums[i])) for i in range(depth + 1)
    ]
    total = sum(layer_tot)
    worst_clump = None
    worst = -1
    all_sums: list[tuple[Fraction, ...]] | None = [] if detailed else None
    for i in range(depth + 1):
        row_sums = []
        for c, own in per_layer_by_color[i].items():
            s = layer_tot[i] - own
            if i > 0:
                s += layer_tot[i - 1] - per_layer_by_color[i - 1].get(c, 0)
            if i < depth:
                s += layer_tot[i + 1] - per_layer_by_color[i + 1].get(c, 0)
            if s > worst:
                worst = s
                worst_clump = (i, c)
            if all_sums is not None:
                row_sums.append(Fraction(s, scale))
        if all_sums is not None:
            all_sums.append(tuple(row_sums))
    return WeightingReport(
        total=Fraction(total, scale),
        feasible=worst <= scale,
        worst_clump=worst_clump,
        worst_sum=Fraction(worst, scale),
        neighbor_sums=None if all_sums is None else tuple(all_sums),
    )


def expected_total(k: int, depth: int) -> Fraction:
    return (depth + 1) * _case_table(k)["layer_quota"]


# --- closed-form diameter bounds -------------------------------------------


def diameter_bound(n: int, delta: int, k: int) -> Fraction:
    """The certified bound (3 - 2/k) n/delta - 1 for k in {3, 4}."""
    if k not in (3, 4):
        raise ClumpError(f"bound proven only for k in {{3, 4}}, got {k}")
    if n < 1 or delta < 1:
        raise ClumpError("need n >= 1 and delta >= 1")
    return Fraction((3 * k - 2) * n, k * delta) - 1


def comparison_bound(n: int, delta: int, k: int) -> Fraction:
    """Older general-k bound (3 - 1/(k-1)) n/delta - 1, for comparison tables."""
    if k < 3 or n < 1 or delta < 1:
        raise ClumpError("need k >= 3, n >= 1, delta >= 1")
    return Fraction((3 * k - 4) * n, (k - 1) * delta) - 1


def baseline_bound(n: int, delta: int) -> Fraction:
    """Classical 3n/(delta+1) growth rate (additive constant dropped)."""
    if n < 1 or delta < 1:
        raise ClumpError("need n >= 1 and delta >= 1")
    return Fraction(3 * n, delta + 1)


def counterexample_diameter(r: int, n: int, delta: int) -> Fraction:
    """Diameter (6r-5)(n-2)/((2r-1)delta + 2r-3) - 1 of the known
    (2r-1)-colorable family; reference constant only."""
    if r < 2 or n < 3 or delta < 1:
        raise ClumpError("need r >= 2, n >= 3, delta >= 1")
    return Fraction((6 * r - 5) * (n - 2), (2 * r - 1) * delta + 2 * r - 3) - 1


def derive_bound_from_weighting(
    h: ClumpGraph, u: DualWeighting, weights: tuple[tuple[int, ...], ...] | None = None
) -> bool:
    """Run the weak-duality chain on a weighted clump graph.

    With blow-up weights w and a feasible dual weighting u, the blow-up
    order n dominates delta_G times the total dual weight, which caps the
    depth.  Asserts the chain and reports whether the closed-form bound
    holds for the blow-up parameters.
    """
    w = weights if weights is not None else h.weights
    if w is None:
        raise ClumpError("need blow-up weights")
    report = verify_weighting(h, u)
    if not report.feasible:
        raise ClumpError(f"infeasible dual weighting (worst sum {report.worst_sum})")
    by_color = [dict(zip(h.sorted_layers[i], w[i])) for i in range(h.depth + 1)]
    n = sum(sum(ws) for ws in w)
    delta_g = min(
        sum(by_color[j][b] for j, b in h.neighbors(i, c)) for i, c in h.clumps()
    )
    total = report.total
    assert n >= delta_g * total, "weak duality violated"
    avg = total / (h.depth + 1)
    assert h.depth <= Fraction(n, delta_g) / avg - 1
    return h.depth <= diameter_bound(n, delta_g, h.k)


def scheme_report(h: ClumpGraph) -> dict:
    """JSON-ready record: per-clump weights, total, feasibility, worst clump."""
    prof = core_sets(h)
    part = partition_segments(h, prof)
    u = assign_weights(h, part, prof)
    rep = verify_weighting(h, u)
    return {
        "weights": [[str(wv) for wv in ws] for ws in u.values],
        "total": str(rep.total),
        "expected_total": str(expected_total(h.k, h.depth)),
        "feasible": rep.feasible,
        "worst": {
            "layer": rep.worst_clump[0],
            "color": rep.worst_clump[1],
            "neighbor_sum": str(rep.worst_sum),
        },
        "segments": [
            {"type": seg.kind, "start": seg.start, "end": seg.end}
            for seg in part.segments
        ],
    }


def format_weighting(u: DualWeighting) -> str:
    return "u=" + "|".join(
        ",".join(str(w) for w in ws) for ws in u.values
    )


def parse_weighting(line: str, h: ClumpGraph) -> DualWeighting:
    body = line.strip()
    if body.startswith("u="):
        body = body[2:]
    parts = body.split("|")
    if len(parts) != h.depth + 1:
        raise ClumpError("weighting line does not align with layers")
    values = []
    for i, part in enumerate(parts):
        ws = [Fraction(x) for x in part.split(",") if x != ""]
        if len(ws) != len(h.layers[i]):
            raise ClumpError(f"layer {i} weighting misaligned")
        if any(wv < 0 for wv in ws):
            raise ClumpError(f"negative weight in layer {i}")
        values.append(tuple(ws))
    return DualWeighting(h, tuple(values))
