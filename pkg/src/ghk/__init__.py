"""Gorenstein h-vector toolkit.

Exact Macaulay-expansion arithmetic, growth and unimodality bounds for
symmetric h-vectors, an explicit construction attaining them asymptotically,
independent combinatorial and finite-field oracles, and convergence tables.
"""
from .binomials import (
    BinomialExpansion,
    bg_inverse_min,
    binomial,
    green_restriction,
    macaulay_expand,
    macaulay_growth,
    shift,
)
from .bounds import (
    Codim3Certificate,
    EnvelopeResult,
    codim3_unimodality_certificate,
    e0_bound,
    envelope_lower,
    mid_lower,
    step_lower,
    unimodal_step_guaranteed,
    unimodality_threshold,
)
from .construct import (
    GorensteinCandidate,
    RDecomposition,
    decompose_r,
    gorenstein_candidate,
    minimal_level_hvector,
    plus_one,
    trivial_extension,
)
from .hvector import HVector
from .oracle import (
    DualForm,
    MonomialSet,
    catalecticant_hilbert,
    compressed_hvector,
    lex_growth,
    lex_level_check,
    lex_socle_monomials,
    matrix_rank_mod_p,
    monomials_of_degree,
    osequence_check,
    random_form,
    si_sequence_check,
    trivial_extension_form,
)
from .asymptotics import (
    ConvergenceReport,
    RatioRow,
    convergence_report,
    kleinschmidt_consistency,
    limit_value,
    ratio_table,
)

__version__ = "0.1.0"
