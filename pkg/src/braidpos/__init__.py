"""Exact braid-closure invariants and certificate-backed positivity verdicts.

The package computes, in exact integer arithmetic: band and conjugate
presentations of braids, Legendrian front counts with the Bennequin-type
genus bounds, Alexander polynomials along two independent routes, Seifert
matrix signatures, and Fox-Milnor slice obstructions.  A rule engine over
knot expressions (torus knots, cables, twist knots, Whitehead doubles,
connected sums, mirrors, braid closures) derives tau, genus, and
positivity verdicts, each backed by a machine-checkable certificate.
"""

from .braids import (
    BandFactorization,
    BandGenerator,
    BraidWord,
    ClosureStats,
    QPFactorization,
    SurfaceStats,
    band_form_of_positive_word,
    cable_positive_braid,
    closure_stats,
    expand_band,
    expand_qp,
    expand_sqp,
    free_reduce,
    is_knot,
    iterated_torus_braid,
    qp_form_of_bands,
    sqp_surface_stats,
    torus_braid,
    torus_knot_genus,
)
from .classifier import (
    DEFAULT_TB_TABLE,
    Certificate,
    ClassifierConfig,
    Verdict,
    classify,
    genus_certificate,
    load_tb_table,
    tau_certificate,
)
from .errors import (
    BraidposError,
    ContradictionError,
    DomainError,
    InexactDivisionError,
    InternalConsistencyError,
    NotAKnotError,
    ParseError,
)
from .expressions import (
    Assertions,
    BraidClosure,
    ConnectedSum,
    IteratedTorus,
    KnotExpression,
    Mirror,
    Torus,
    TwistKnot,
    WhiteheadDouble,
    braid_closure_from_bands,
    braid_closure_from_conjugates,
)
from .grammar import (
    format_braid,
    format_expression,
    parse_braid,
    parse_braid_text,
    parse_expression_text,
)
from .invariants import (
    SeifertMatrix,
    alexander_burau,
    alexander_seifert,
    burau_reduced,
    determinant,
    fox_milnor_necessary,
    fox_milnor_twist_family,
    normalize_alexander,
    seifert_matrix,
    signature,
    twist_double_alexander,
)
from .laurent import LaurentPoly, laurent_matrix_det
from .legendrian import (
    FrontStats,
    bennequin_sum,
    legendrianize,
    slice_genus_lower_bound,
    tau_lower_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Assertions",
    "BandFactorization",
    "BandGenerator",
    "BraidClosure",
    "BraidWord",
    "BraidposError",
    "Certificate",
    "ClassifierConfig",
    "ClosureStats",
    "ConnectedSum",
    "ContradictionError",
    "DEFAULT_TB_TABLE",
    "DomainError",
    "FrontStats",
    "InexactDivisionError",
    "InternalConsistencyError",
    "IteratedTorus",
    "KnotExpression",
    "LaurentPoly",
    "Mirror",
    "NotAKnotError",
    "ParseError",
    "QPFactorization",
    "SeifertMatrix",
    "SurfaceStats",
    "Torus",
    "TwistKnot",
    "Verdict",
    "WhiteheadDouble",
    "alexander_burau",
    "alexander_seifert",
    "band_form_of_positive_word",
    "bennequin_sum",
    "braid_closure_from_bands",
    "braid_closure_from_conjugates",
    "burau_reduced",
    "cable_positive_braid",
    "classify",
    "closure_stats",
    "determinant",
    "expand_band",
    "expand_qp",
    "expand_sqp",
    "format_braid",
    "format_expression",
    "fox_milnor_necessary",
    "fox_milnor_twist_family",
    "free_reduce",
    "genus_certificate",
    "is_knot",
    "iterated_torus_braid",
    "laurent_matrix_det",
    "legendrianize",
    "load_tb_table",
    "normalize_alexander",
    "parse_braid",
    "parse_braid_text",
    "parse_expression_text",
    "qp_form_of_bands",
    "seifert_matrix",
    "signature",
    "slice_genus_lower_bound",
    "sqp_surface_stats",
    "tau_certificate",
    "tau_lower_bound",
    "torus_braid",
    "torus_knot_genus",
    "twist_double_alexander",
]
