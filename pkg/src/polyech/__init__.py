"""Exact arithmetic for chain complexes of corner-rounded lattice paths.

The package is organized in layers: `lattice` (vectors and extended
angles), `paths` (admissible paths, rounding, nesting), `chains`
(labeled generators, the differential, and the auxiliary chain maps),
`homology` (integer homology of declaratively built complexes via Smith
normal form), and `verify` (seeded randomized verification suites, also
exposed through the `polyech` command line tool).
"""

from .lattice import (
    ExtendedAngle,
    GenericAngle,
    Vec,
    angle_less,
    antipode,
    cross,
    dot,
    lattice_points_in_hull,
    primitive_of,
)
from .paths import (
    AdmissiblePath,
    Closed,
    Corner,
    GAMMA0,
    Open,
    Periodic,
    act_symmetry,
    box_path,
    canonical_translation,
    corners,
    enumerate_below,
    lattice_point_count,
    leq,
    make_path,
    n_convex,
    path_from_json,
    path_sort_key,
    path_to_json,
    position_at_cut,
    restrict,
    round_corner,
    translate,
    traversal_edges,
    x_axis_path,
)
from .chains import (
    Chain,
    Generator,
    Laurent,
    canonical_chain,
    canonical_generator,
    chain_from_json,
    chain_to_json,
    component_grading,
    delta_prime,
    delta_twisted,
    differential,
    e_cycle,
    e_gen,
    flatten,
    generator_from_json,
    generator_to_json,
    h_cycle,
    index,
    k_homotopy,
    make_generator,
    p_gen,
    q_cycle,
    relative_index,
    splice,
    translate_generator,
    u_map,
    x_axis_generator,
    z_cycle,
)
from .homology import (
    GradedComplex,
    HomologyGroup,
    InducedMap,
    SmithForm,
    SparseIntMatrix,
    StabilizeResult,
    build_complex,
    grow_spec,
    induced_map,
    smith_normal_form,
    stabilize,
    write_complex,
)
from .verify import (
    CheckResult,
    SuiteReport,
    run_suite,
    run_suites,
    suite_names,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissiblePath",
    "Chain",
    "CheckResult",
    "Closed",
    "Corner",
    "ExtendedAngle",
    "GAMMA0",
    "GenericAngle",
    "Generator",
    "GradedComplex",
    "HomologyGroup",
    "InducedMap",
    "Laurent",
    "Open",
    "Periodic",
    "SmithForm",
    "SparseIntMatrix",
    "StabilizeResult",
    "SuiteReport",
    "Vec",
    "act_symmetry",
    "angle_less",
    "antipode",
    "box_path",
    "build_complex",
    "canonical_chain",
    "canonical_generator",
    "canonical_translation",
    "chain_from_json",
    "chain_to_json",
    "component_grading",
    "corners",
    "cross",
    "delta_prime",
    "delta_twisted",
    "differential",
    "dot",
    "e_cycle",
    "e_gen",
    "enumerate_below",
    "flatten",
    "generator_from_json",
    "generator_to_json",
    "grow_spec",
    "h_cycle",
    "index",
    "induced_map",
    "k_homotopy",
    "lattice_point_count",
    "lattice_points_in_hull",
    "leq",
    "make_generator",
    "make_path",
    "n_convex",
    "p_gen",
    "path_from_json",
    "path_sort_key",
    "path_to_json",
    "position_at_cut",
    "primitive_of",
    "q_cycle",
    "relative_index",
    "restrict",
    "round_corner",
    "run_suite",
    "run_suites",
    "smith_normal_form",
    "splice",
    "stabilize",
    "suite_names",
    "translate",
    "translate_generator",
    "traversal_edges",
    "u_map",
    "write_complex",
    "x_axis_generator",
    "x_axis_path",
    "z_cycle",
]
