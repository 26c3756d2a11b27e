from fractions import Fraction as Fr

import pytest

from clumpgraph.clumps import ClumpError, enumerate_strongly_canonical
from clumpgraph.structure import core_sets, partition_segments
from clumpgraph.weighting import (
    DualWeighting,
    assign_weights,
    baseline_bound,
    comparison_bound,
    counterexample_diameter,
    derive_bound_from_weighting,
    diameter_bound,
    expected_total,
    format_weighting,
    parse_weighting,
    scheme_certificate,
    scheme_report,
    verify_weighting,
)

from conftest import clump


class TestAssignWeights:
    def test_kind1_k3(self):
        u = assign_weights(clump(3, "0|1,2|0"))
        assert u.values == ((Fr(5, 14),), (Fr(2, 7), Fr(2, 7)), (Fr(5, 14),))
        assert u.total() == Fr(9, 7) == 3 * Fr(3, 7)

    def test_all_small_chain_k3(self):
        u = assign_weights(clump(3, "0|1|0"))
        assert u.values == ((Fr(3, 7),), (Fr(3, 7),), (Fr(3, 7),))
        assert u.total() == Fr(9, 7)

    def test_kind2_k4(self):
        u = assign_weights(clump(4, "0|1,2,3|0|1,2,3|0"))
        assert u.values[0] == (Fr(7, 20),)
        assert u.values[1] == (Fr(1, 6),) * 3
        assert u.values[2] == (Fr(3, 10),)
        assert u.values[4] == (Fr(7, 20),)
        assert u.total() == Fr(2) == 5 * Fr(4, 10)

    def test_wide_small_layer_splits_quota(self):
        # k=4 layer of size 3 > k/2 in an all-small segment: core clumps
        # get 2/10, the rest share (4 - 2|S|)/10
        h = clump(4, "0|1,2|0,3|1,2|0")
        prof = core_sets(h)
        assert not any(prof.big)
        u = assign_weights(h)
        for i in range(h.depth + 1):
            assert u.layer_total(i) == Fr(4, 10)

    def test_rejects_large_k(self):
        with pytest.raises(ClumpError, match="unsupported k"):
            assign_weights(clump(5, "0|1|0"))

    def test_rejects_foreign_partition(self):
        part = partition_segments(clump(3, "0|1|0|1|0"))
        with pytest.raises(ClumpError):
            assign_weights(clump(3, "0|1|0"), part)


class TestVerifyWeighting:
    def test_kind1_equality_at_big_clump(self):
        h = clump(3, "0|1,2|0")
        rep = verify_weighting(h, assign_weights(h), detailed=True)
        assert rep.feasible and rep.total == Fr(9, 7)
        # (k-2) * 2/(3k-2) + 2 * (k+2)/(2(3k-2)) = 1, attained exactly
        assert rep.neighbor_sums[1] == (Fr(1), Fr(1))
        assert rep.worst_sum == 1

    def test_kind2_k4_sums(self):
        h = clump(4, "0|1,2,3|0|1,2,3|0")
        rep = verify_weighting(h, assign_weights(h), detailed=True)
        assert rep.feasible
        # big-layer clumps next to a segment end: the closed form
        # ((11k-4)(k-1)-2)/(4(3k-2)(k-1)) at k=4
        closed = Fr((11 * 4 - 4) * (4 - 1) - 2, 4 * (3 * 4 - 2) * (4 - 1))
        assert closed == Fr(59, 60)
        assert rep.neighbor_sums[1] == (closed,) * 3
        # interior singleton: exact equality
        assert rep.neighbor_sums[2] == (Fr(1),)

    def test_chain_middle_sum(self):
        h = clump(3, "0|1|0")
        rep = verify_weighting(h, assign_weights(h), detailed=True)
        assert rep.neighbor_sums[1] == (Fr(6, 7),)

    def test_infeasible_detected(self):
        h = clump(3, "0|1,2|0")
        ones = DualWeighting(h, ((Fr(1),), (Fr(1), Fr(1)), (Fr(1),)))
        rep = verify_weighting(h, ones)
        assert not rep.feasible
        assert rep.worst_sum == 3
        assert rep.worst_clump == (1, 1)

    def test_domain_mismatch(self):
        u = assign_weights(clump(3, "0|1|0"))
        with pytest.raises(ClumpError):
            verify_weighting(clump(3, "0|1|2"), u)

    @pytest.mark.parametrize("k,dmax", [(3, 6), (4, 5)])
    def test_totals_and_feasibility_small(self, k, dmax):
        for depth in range(2, dmax + 1):
            want = expected_total(k, depth)
            for h in enumerate_strongly_canonical(k, depth):
                u = assign_weights(h)
                assert all(w >= 0 for ws in u.values for w in ws)
                rep = verify_weighting(h, u)
                assert rep.total == want
                assert rep.feasible

    @pytest.mark.parametrize("k,dmax", [(3, 6), (4, 5)])
    def test_segment_totals(self, k, dmax):
        quota = Fr(k, 3 * k - 2)
        for depth in range(2, dmax + 1):
            for h in enumerate_strongly_canonical(k, depth):
                prof = core_sets(h, checked=False)
                part = partition_segments(h, prof)
                u = assign_weights(h, part, prof)
                for seg in part.segments:
                    total = sum(
                        (u.layer_total(i) for i in range(seg.start, seg.end + 1)),
                        Fr(0),
                    )
                    length = seg.end - seg.start + 1
                    if seg.kind == 1:
                        assert total == 3 * quota
                    elif seg.kind == 2:
                        s = (length - 1) // 2
                        assert total == (2 * s + 1) * quota
                    else:
                        for i in range(seg.start, seg.end + 1):
                            assert u.layer_total(i) == quota

    @pytest.mark.parametrize("k,dmax", [(3, 6), (4, 5)])
    def test_paired_deficiency(self, k, dmax):
        """Same-colored non-adjacent clumps outside their cores in
        neighboring all-small layers jointly weigh at least 2/(3k-2)."""
        floor = Fr(2, 3 * k - 2)
        for depth in range(2, dmax + 1):
            for h in enumerate_strongly_canonical(k, depth):
                prof = core_sets(h, checked=False)
                part = partition_segments(h, prof)
                u = assign_weights(h, part, prof)
                for i in range(depth):
                    if part.kind_of(i) != 3 or part.kind_of(i + 1) != 3:
                        continue
                    shared = (h.layers[i] - prof.core[i]) & (
                        h.layers[i + 1] - prof.core[i + 1]
                    )
                    for c in shared:
                        assert u.value(i, c) + u.value(i + 1, c) >= floor


class TestBounds:
    def test_main_bound_values(self):
        assert diameter_bound(20, 4, 4) == Fr(23, 2)
        assert diameter_bound(21, 3, 3) == Fr(46, 3)
        assert diameter_bound(12, 4, 3) == 6  # n = 3 delta
        assert diameter_bound(30, 10, 3) == 6

    def test_main_bound_rejects(self):
        with pytest.raises(ClumpError):
            diameter_bound(10, 2, 5)
        with pytest.raises(ClumpError):
            diameter_bound(0, 1, 3)

    def test_comparison_bound_strictly_larger(self):
        for k in (3, 4):
            for n in range(1, 11):
                for delta in range(1, 11):
                    if n >= delta:
                        assert comparison_bound(n, delta, k) > diameter_bound(n, delta, k)

    def test_baseline(self):
        assert baseline_bound(12, 3) == 9

    def test_counterexample_family(self):
        # r=2: 7(n-2)/(3 delta + 1) - 1
        assert counterexample_diameter(2, 30, 5) == Fr(7 * 28, 16) - 1
        with pytest.raises(ClumpError):
            counterexample_diameter(1, 30, 5)

    def test_certificate(self):
        cert = scheme_certificate(3)
        assert cert.avg_layer_weight == Fr(3, 7)
        assert cert.bound(21, 3) == diameter_bound(21, 3, 3)


class TestDeriveBound:
    def test_unit_weights_kind1(self):
        h = clump(3, "0|1,2|0", ((1,), (1, 1), (1,)))
        u = assign_weights(h.unweighted())
        assert derive_bound_from_weighting(h, u)

    def test_weighted_chain(self):
        h = clump(3, "0|1|0", ((1,), (2,), (2,)))
        u = assign_weights(h.unweighted())
        assert derive_bound_from_weighting(h, u)

    def test_all_unit_weights_reduce_to_clump_count(self):
        h = clump(3, "0|1|0", ((1,), (1,), (1,)))
        u = assign_weights(h.unweighted())
        rep = verify_weighting(h.unweighted(), u)
        assert h.n_clumps >= rep.total
        assert derive_bound_from_weighting(h, u)

    def test_rejects_infeasible(self):
        h = clump(3, "0|1,2|0", ((1,), (1, 1), (1,)))
        ones = DualWeighting(h.unweighted(), ((Fr(1),), (Fr(1), Fr(1)), (Fr(1),)))
        with pytest.raises(ClumpError, match="infeasible"):
            derive_bound_from_weighting(h, ones)


class TestSerialization:
    def test_round_trip(self):
        h = clump(3, "0|1,2|0")
        u = assign_weights(h)
        assert parse_weighting(format_weighting(u), h) == u

    def test_format_is_exact_text(self):
        u = assign_weights(clump(3, "0|1,2|0"))
        assert format_weighting(u) == "u=5/14|2/7,2/7|5/14"

    def test_scheme_report_shape(self):
        rep = scheme_report(clump(3, "0|1,2|0"))
        assert rep["total"] == "9/7" and rep["feasible"]
        assert rep["worst"]["neighbor_sum"] == "1"
