"""Mellin-Barnes special functions and exact sum-of-Gamma statistics.

The package evaluates the Meijer G / Fox H / Fox H-bar / extended H-hat
function family by adaptive contour integration and applies it to the
distribution of sums of independent non-identical Gamma variates and to
the outage probability and average bit error rate of maximal-ratio
combining receivers over Nakagami-m fading channels, with Monte Carlo
validation utilities.
"""

from .cgamma import gamma_pow, log_gamma
from .errors import (
    DomainError,
    GammaSumError,
    InconsistentCoefficients,
    NoConvergence,
    OracleDiverged,
    ParseError,
    PoleError,
)
from .foxh import HFamilySpec, HKind, eval_h, reduce_kind
from .mellin import (
    ContourSpec,
    EvalResult,
    GammaTermSpec,
    Slot,
    integrand,
    integrate,
    integrate_ln,
    pole_strip,
)
from .montecarlo import SimConfig, empirical_cdf_distance, sample_gamma, sample_sum, simulate_ber
from .mrc import (
    CBFSK,
    CBPSK,
    DBPSK,
    MODULATIONS,
    NBFSK,
    Modulation,
    ber,
    ber_closed_form_noncoherent,
    ber_hhat_eval,
    ber_integer_coherent,
    ber_integer_noncoherent,
    ber_quadrature_oracle,
    cep,
    custom_modulation,
    modulation_by_name,
    outage,
)
from .sums import (
    BranchParams,
    cdf,
    cdf_eval,
    cdf_single,
    pdf,
    pdf_eval,
    pdf_integer,
    pdf_lauricella_oracle,
)

__version__ = "0.1.0"

__all__ = [
    "BranchParams",
    "CBFSK",
    "CBPSK",
    "ContourSpec",
    "DBPSK",
    "DomainError",
    "EvalResult",
    "GammaSumError",
    "GammaTermSpec",
    "HFamilySpec",
    "HKind",
    "InconsistentCoefficients",
    "MODULATIONS",
    "Modulation",
    "NBFSK",
    "NoConvergence",
    "OracleDiverged",
    "ParseError",
    "PoleError",
    "SimConfig",
    "Slot",
    "ber",
    "ber_closed_form_noncoherent",
    "ber_hhat_eval",
    "ber_integer_coherent",
    "ber_integer_noncoherent",
    "ber_quadrature_oracle",
    "cdf",
    "cdf_eval",
    "cdf_single",
    "cep",
    "custom_modulation",
    "empirical_cdf_distance",
    "eval_h",
    "gamma_pow",
    "integrand",
    "integrate",
    "integrate_ln",
    "log_gamma",
    "modulation_by_name",
    "outage",
    "pdf",
    "pdf_eval",
    "pdf_integer",
    "pdf_lauricella_oracle",
    "pole_strip",
    "reduce_kind",
    "sample_gamma",
    "sample_sum",
    "simulate_ber",
    "__version__",
]
