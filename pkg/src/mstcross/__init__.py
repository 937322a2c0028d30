"""Exact red-blue MST crossing analysis for planar point sets.

The package computes, bounds, and experimentally probes how often the
minimum spanning trees of a red class and a blue class cross each
other, always with exact rational arithmetic:

- geom/spanning/crossing: points, MSTs, and crossing counts;
- generators: reproducible point-set families and fixtures;
- strategies: colorings with provable crossing guarantees;
- oracle: brute-force exact maxima on small instances;
- verifiers: samplers for standalone geometric lemmas;
- experiments: the named CSV-producing experiment suite;
- service + cli: an HTTP facade and its thin command-line client.
"""

from .errors import (CapExceeded, DegenerateIntersection, DoesNotFill,
                     EmptyColorClass, GenerationFailed,
                     IndistinguishableAtPrecision, InternalInvariantViolation,
                     MstCrossError, NoRichCells, NonGenericInput,
                     NotConvexPosition, NotFlat, NotLabeledGrid,
                     SearchExhausted, TooFewPoints, TooLarge)
from .geom import (Genericity, Point, PointSet, convex_hull, format_pointset,
                   frac, from_coords, in_convex_position, is_generic,
                   orientation, parse_pointset, pt, segments_properly_cross,
                   squared_distance)
from .spanning import (Tree, enumerate_msts, mst, tree_from_json, tree_is_mst,
                       tree_to_json)
from .crossing import (Coloring, CrossingReport, coloring_from_indices,
                       cross_rb, cross_rb_min, longer_edge_crossing_profile)
from .density import (bounding_square_side, canonical_cells, density,
                      density_improving_subset, fills_grid)
from .generators import (GridLabels, dense_set, equidistant_convex_grid,
                         figure9_configuration, flat_convex_set,
                         grid_fill_fixture, island_fixture, perturbed_grid_p0,
                         perturbed_regular_polygon, random_perturbed_grid,
                         uniform_square)
from .strategies import (StrategyOutcome, alternate_convex, dense_coloring,
                         flat_convex_coloring, grid_fill_coloring,
                         grid_five_eighths_coloring, island_wedge_coloring,
                         largest_convex_subset, one_crossing_coloring,
                         random_coloring)
from .oracle import (OracleResult, brute_force_mst_weight, exact_cross_number,
                     exact_cross_number_nongeneric, search_zero_cross_5set)
from .verifiers import (count_bridges, detect_good_cells, good_cell_fixture,
                        good_cell_points, internal_crossing_colorings,
                        profile_crossing_constant, profile_sweep_instances,
                        verify_good_cell_lemma, verify_island_lemma,
                        verify_small_angle_lemma)
from .experiments import (CSV_HEADER, REGISTRY, ExperimentReport,
                          ExperimentRow, ExperimentSpec, child_seed,
                          estimate_convex_random_expectation,
                          estimate_random_expectation, run_experiment)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "MstCrossError", "DegenerateIntersection", "NonGenericInput",
    "EmptyColorClass", "CapExceeded", "TooLarge", "TooFewPoints",
    "NotConvexPosition", "NotFlat", "NotLabeledGrid", "DoesNotFill",
    "NoRichCells", "GenerationFailed", "SearchExhausted",
    "IndistinguishableAtPrecision", "InternalInvariantViolation",
    # geometry
    "Point", "PointSet", "pt", "frac", "from_coords", "format_pointset",
    "parse_pointset", "orientation", "squared_distance",
    "segments_properly_cross", "convex_hull", "in_convex_position",
    "is_generic", "Genericity",
    # spanning trees
    "Tree", "mst", "enumerate_msts", "tree_is_mst", "tree_to_json",
    "tree_from_json",
    # crossings
    "Coloring", "coloring_from_indices", "CrossingReport", "cross_rb",
    "cross_rb_min", "longer_edge_crossing_profile",
    # density
    "density", "bounding_square_side", "canonical_cells", "fills_grid",
    "density_improving_subset",
    # generators
    "GridLabels", "perturbed_regular_polygon", "flat_convex_set",
    "perturbed_grid_p0", "random_perturbed_grid", "equidistant_convex_grid",
    "uniform_square", "dense_set", "island_fixture", "grid_fill_fixture",
    "figure9_configuration",
    # strategies
    "StrategyOutcome", "alternate_convex", "flat_convex_coloring",
    "one_crossing_coloring", "island_wedge_coloring",
    "grid_five_eighths_coloring", "grid_fill_coloring", "dense_coloring",
    "random_coloring", "largest_convex_subset",
    # oracle
    "OracleResult", "exact_cross_number", "exact_cross_number_nongeneric",
    "search_zero_cross_5set", "brute_force_mst_weight",
    # verifiers
    "verify_small_angle_lemma", "verify_island_lemma",
    "verify_good_cell_lemma", "profile_crossing_constant",
    "profile_sweep_instances", "detect_good_cells", "good_cell_points",
    "good_cell_fixture", "internal_crossing_colorings", "count_bridges",
    # experiments
    "CSV_HEADER", "REGISTRY", "ExperimentSpec", "ExperimentRow",
    "ExperimentReport", "child_seed", "run_experiment",
    "estimate_random_expectation", "estimate_convex_random_expectation",
]
