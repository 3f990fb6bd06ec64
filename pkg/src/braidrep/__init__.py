"""Exact-arithmetic toolkit for local matrix representations of braid-like
groups and monoids: presentations, a representation catalog, faithfulness
and reducibility analysis, singular extensions, and the classification
polynomial systems, all over exact scalar rings."""

from .rings import (
    QQ, DomainError, Element, FractionField, LaurentRing, NonUnitError,
    ParseError, PolynomialRing, RationalRing, Ring, RingError,
    RingMismatchError,
)
from .matrices import (
    ALL_LINES, Line, Matrix, MatrixError, NonInvertibleError, ShapeError,
    block_embed, common_invariant_line, invariant_lines, line_is_invariant,
)
from .presentations import (
    EMPTY_WORD, Generator, MonoidInverseError, Presentation,
    PresentationError, Relation, WordError, build_presentation, free_reduce,
    gamma, rho, sigma, tau, tau_bar, word, word_invert,
)
from .catalog import (
    DIM3_FAMILY_IDS, ETA_IDS, FAMILY_IDS, ZETA_IDS, ZETAP_IDS, Family,
    FamilyConstraintError, RelationCheck, RelationReport, Representation,
    build_family, family, rep_burau, rep_eta, rep_lkb, rep_zeta,
    rep_zeta_prime, sample_bindings,
)
from .analysis import (
    ReducibilityReport, WitnessReport, braid_restriction_report,
    designated_witness, equal_image_witness, kernel_generators,
    reducibility_audit, restriction_to_braid, unfaithfulness_audit,
)
from .extensions import (
    PhiCoefficients, PhiMatchResult, SingularTauError, phi_extend,
    phi_match_closed_forms, phi_tau_zeta1, promote_to_group, solve_phi_match,
)
from .classifier import (
    ClassifyResult, Equation, FamilyMatch, PolynomialSystem,
    classify_solution, gamma_forcing_report, generate_system,
    published_reduced_equations, sets_equal_up_to_sign, substitute_system,
    verify_ansatz, verify_family,
)
from .audit import AUDIT_TAGS, AuditEntry, AuditSummary, run_audit

__version__ = "0.1.0"
