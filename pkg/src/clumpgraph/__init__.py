"""Diameter bounds for k-colorable graphs via clump graphs and LP duality.

The pipeline: layer a connected graph from a root of maximum eccentricity,
fix a proper coloring, saturate, and quotient by (layer, color) to get a
clump graph.  Strongly canonical clump graphs carry an exact rational
dual weighting whose total, combined with weak LP duality, bounds the
diameter of every k-colorable graph by (3 - 2/k) n/delta - 1 for k in
{3, 4}.  Everything here is exact; the package never computes with floats.
"""

from .graphs import (
    ColoredLayeredGraph,
    GraphError,
    GraphFormatError,
    Layering,
    NotConnectedError,
    SimpleGraph,
    chromatic_number,
    diameter,
    format_colored_graph,
    format_graph,
    is_saturated,
    layer_and_root,
    layered_colored,
    normalize_end_layer,
    parse_colored_graph,
    parse_graph,
    proper_coloring,
    saturate,
)
from .clumps import (
    ClumpError,
    ClumpGraph,
    ValidationReport,
    Violation,
    blow_up,
    build_clump_graph,
    count_strongly_canonical,
    enumerate_strongly_canonical,
    format_clumps,
    parse_clumps,
    to_dot,
    validate_canonical,
    validate_strongly_canonical,
)
from .structure import (
    CoreProfile,
    Segment,
    SegmentPartition,
    check_basic_lemma,
    check_main_structure,
    core_sets,
    partition_segments,
    structure_report,
)
from .weighting import (
    BoundCertificate,
    DualWeighting,
    WeightingReport,
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
from .lp import (
    DualityRecord,
    LPError,
    LPInstance,
    LPSolution,
    build_dual_lp,
    build_primal_lp,
    check_solution,
    duality_report,
    format_lp,
    parse_lp,
    simplex_solve,
)
from .search import (
    ExtremalRow,
    SchemeFailure,
    check_scheme_on,
    count_connected_graphs,
    enumerate_connected_graphs,
    extremal_csv,
    extremal_table,
    scheme_failure_search,
)

__version__ = "0.1.0"
