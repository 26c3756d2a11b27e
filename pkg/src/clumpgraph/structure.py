"""Structural analysis of strongly canonical clump graphs.

The core set of a layer holds the colors adjacent to everything in both
neighboring layers; under derived adjacency these are exactly the colors
absent from both neighbors.  A layer is big when its core has more than
k/2 colors.  Big layers can only occur at every other index, which yields
a partition of the layer range into three segment shapes: an isolated big
layer with its two small flanks, an alternating run of two or more big
layers, and maximal all-small runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clumps import ClumpGraph, ClumpError, ValidationReport, Violation, validate_strongly_canonical


@dataclass(frozen=True)
class CoreProfile:
    """Per-layer core color sets and the big/small classification."""

    core: tuple[frozenset[int], ...]
    big: tuple[bool, ...]

    def core_at(self, i: int) -> frozenset[int]:
        """Core set with empty sentinels outside 0..depth."""
        if 0 <= i < len(self.core):
            return self.core[i]
        return frozenset()

    def big_at(self, i: int) -> bool:
        return bool(0 <= i < len(self.big) and self.big[i])


@dataclass(frozen=True)
class Segment:
    kind: int  # 1, 2 or 3
    start: int
    end: int  # inclusive

    def __contains__(self, i: int) -> bool:
        return self.start <= i <= self.end


@dataclass(frozen=True)
class SegmentPartition:
    segments: tuple[Segment, ...]

    def segment_of(self, i: int) -> Segment:
        for seg in self.segments:
            if i in seg:
                return seg
        raise IndexError(f"layer {i} not covered")

    def kind_of(self, i: int) -> int:
        return self.segment_of(i).kind


def _require_strongly_canonical(h: ClumpGraph) -> None:
    report = validate_strongly_canonical(h.unweighted())
    if not report.verdict:
        raise ClumpError(f"not strongly canonical: {report.violations[0].detail}")


def core_sets(h: ClumpGraph, checked: bool = True) -> CoreProfile:
    """Core color sets C_i minus both neighbor layers, with big flags."""
    if checked:
        _require_strongly_canonical(h)
    layers = h.layers
    depth = h.depth
    core = []
    big = []
    for i, layer in enumerate(layers):
        around = set()
        if i > 0:
            around |= layers[i - 1]
        if i < depth:
            around |= layers[i + 1]
        s = layer - around
        core.append(frozenset(s))
        big.append(2 * len(s) > h.k)
    return CoreProfile(tuple(core), tuple(big))


def check_basic_lemma(h: ClumpGraph) -> ValidationReport:
    """Evaluate the seven structural facts that hold on every strongly
    canonical clump graph (the last one only for k in {3, 4}):

    (a) |C_i| <= k - max(|S_{i-1}|, |S_{i+1}|)
    (b) |S_i| <= k - 1
    (c) a big layer has small neighbors and sits strictly inside
    (d) singleton layers equal their core
    (e) max(|C_i - S_i|, |C_{i+1} - S_{i+1}|) <= k - |S_i| - |S_{i+1}|
    (f) |S_i| = k - 1 forces C_i = S_i and singleton core neighbors
    (g) for k in {3, 4}: big implies |S_i| = k - 1
    """
    _require_strongly_canonical(h)
    k, depth = h.k, h.depth
    prof = core_sets(h, checked=False)
    layers = h.layers
    out: list[Violation] = []

    def sz(i: int) -> int:
        return len(layers[i]) if 0 <= i <= depth else 0

    for i in range(depth + 1):
        s = len(prof.core[i])
        if sz(i) > k - max(len(prof.core_at(i - 1)), len(prof.core_at(i + 1))):
            out.append(
                Violation("layer-vs-core-bound", i, f"|C_{i}|={sz(i)} too large next to cores")
            )
        if s > k - 1:
            out.append(Violation("core-size-bound", i, f"|S_{i}|={s} > k-1"))
        if prof.big[i]:
            if not (1 <= i <= depth - 1):
                out.append(Violation("big-isolated", i, "big layer at an end"))
            if prof.big_at(i - 1) or prof.big_at(i + 1):
                out.append(Violation("big-isolated", i, "two adjacent big layers"))
        if sz(i) == 1 and prof.core[i] != layers[i]:
            out.append(Violation("singleton-is-core", i, "singleton layer with empty core"))
        nxt = len(prof.core_at(i + 1))
        lhs = max(
            sz(i) - len(prof.core[i]),
            (sz(i + 1) - nxt) if i < depth else 0,
        )
        if lhs > k - len(prof.core[i]) - nxt:
            out.append(
                Violation("noncore-bound", i, f"non-core excess {lhs} over budget at {i},{i + 1}")
            )
        if s == k - 1:
            ok = prof.core[i] == layers[i]
            for j in (i - 1, i + 1):
                if 0 <= j <= depth:
                    ok = ok and sz(j) == 1 and len(prof.core[j]) == 1
            if not ok:
                out.append(
                    Violation("near-maximal-core", i, f"|S_{i}|=k-1 without singleton flanks")
                )
        if k in (3, 4) and prof.big[i] and s != k - 1:
            out.append(
                Violation("big-core-maximal", i, f"big layer with |S_{i}|={s} != k-1")
            )
    return ValidationReport(tuple(out))


def partition_segments(h: ClumpGraph, profile: CoreProfile | None = None) -> SegmentPartition:
    """Deterministic segment cover of the layer range 0..depth.

    Maximal chains of big layers spaced exactly two apart become one
    segment spanning one small layer on each side (kind 1 for a lone big
    layer, kind 2 for chains); every remaining maximal run of layers is an
    all-small kind-3 segment.
    """
    prof = profile if profile is not None else core_sets(h)
    depth = h.depth
    bigs = [i for i in range(depth + 1) if prof.big[i]]
    segments: list[Segment] = []
    used = [False] * (depth + 1)
    idx = 0
    while idx < len(bigs):
        j = idx
        while j + 1 < len(bigs) and bigs[j + 1] == bigs[j] + 2:
            j += 1
        chain = bigs[idx : j + 1]
        start, end = chain[0] - 1, chain[-1] + 1
        if start < 0 or end > depth:
            raise ClumpError(f"big layer at index {chain[0]} lacks a small flank")
        segments.append(Segment(1 if len(chain) == 1 else 2, start, end))
        for t in range(start, end + 1):
            if used[t]:
                raise ClumpError("overlapping big-layer segments")
            used[t] = True
        idx = j + 1
    i = 0
    while i <= depth:
        if used[i]:
            i += 1
            continue
        j = i
        while j + 1 <= depth and not used[j + 1]:
            j += 1
        # all-small run boundary conditions; failures signal a bug upstream
        if i != 0 and not (i > 2 and prof.big[i - 2]):
            raise ClumpError(f"all-small run at {i} not preceded by a big layer at {i - 2}")
        if j != depth and not (j < depth - 2 and prof.big[j + 2]):
            raise ClumpError(f"all-small run ending at {j} not followed by a big layer at {j + 2}")
        if any(prof.big[t] for t in range(i, j + 1)):
            raise ClumpError("big layer inside an all-small run")
        segments.append(Segment(3, i, j))
        for t in range(i, j + 1):
            used[t] = True
        i = j + 1
    segments.sort(key=lambda s: s.start)
    if segments[0].start != 0 or segments[-1].end != depth or any(
        segments[t + 1].start != segments[t].end + 1 for t in range(len(segments) - 1)
    ):
        raise ClumpError("segments do not cover the layer range")
    return SegmentPartition(tuple(segments))


def check_main_structure(h: ClumpGraph, partition: SegmentPartition | None = None) -> ValidationReport:
    """Check that layers inside kind-1/2 segments equal their core and
    have 1 or k-1 colors.  Guaranteed for k in {3, 4}; for k >= 5 a
    failure is a genuine witness and carries the offending layer."""
    prof = core_sets(h)
    part = partition if partition is not None else partition_segments(h, prof)
    out: list[Violation] = []
    for seg in part.segments:
        if seg.kind == 3:
            continue
        for i in range(seg.start, seg.end + 1):
            size = len(h.layers[i])
            if prof.core[i] != h.layers[i] or size not in (1, h.k - 1):
                out.append(
                    Violation(
                        "segment-layer-shape",
                        i,
                        f"kind-{seg.kind} segment layer with |C|={size}, "
                        f"|S|={len(prof.core[i])}",
                    )
                )
    return ValidationReport(tuple(out))


def structure_report(h: ClumpGraph) -> dict:
    """JSON-ready structural report: cores, big flags, segments, violations."""
    prof = core_sets(h)
    part = partition_segments(h, prof)
    checks = check_basic_lemma(h).violations + check_main_structure(h, part).violations
    return {
        "layers": [
            {"S": sorted(prof.core[i]), "big": prof.big[i]}
            for i in range(h.depth + 1)
        ],
        "segments": [
            {"type": seg.kind, "start": seg.start, "end": seg.end}
            for seg in part.segments
        ],
        "violations": [
            {"condition": v.condition, "layer": v.layer, "detail": v.detail}
            for v in checks
        ],
    }
