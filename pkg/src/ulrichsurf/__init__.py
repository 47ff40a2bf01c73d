"""Exact-arithmetic toolkit for numerical Ulrich-bundle conditions on
polarized surfaces given by their Picard lattice data."""

from .classify import (
    ClassificationReport,
    Verdict,
    classify,
    is_ulrich_wild,
    moduli_dims,
    special_rank2_exists,
    stable_special_exists,
)
from .catalog import (
    builtin_surface,
    clifford_report,
    del_pezzo,
    enriques_numeric,
    hirzebruch_surface,
    kim_cubic,
    p1xp1_surface,
    p2_surface,
    parse_surface,
    serialize_surface,
    table1,
    table1_row,
    verify_table1,
)
from .enumeration import enumerate_bounded, enumerate_rank2_exact, p1xp1_closed_form
from .invariants import (
    ChernData,
    HypothesisFlags,
    PolarizedSurface,
    SurfaceKind,
    chern_twist,
    chi_structure,
    derived_invariants,
    embedding_sanity,
    riemann_roch_chi,
)
from .lattice import (
    DivisorClass,
    IntersectionLattice,
    blowup_p2_lattice,
    hirzebruch_lattice,
    make_lattice,
)
from .ulrich import (
    UlrichCheckReport,
    chi_vanishing_check,
    dual_twist,
    line_dual,
    line_numeric_check,
    rank_numeric_check,
    special_rank2_chern,
)

__version__ = "0.1.0"
