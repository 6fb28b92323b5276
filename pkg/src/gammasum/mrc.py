"""Outage probability and average BER of an L-branch MRC receiver.

With maximal ratio combining the output SNR is the sum of the per-branch
SNRs, so the outage probability is just the sum CDF at the threshold.
The average BER integrates the conditional error probability

    cep(y) = GammaUpper(p, q*y) / (2 * Gamma(p))

against the output-SNR density; the (p, q) pairs of the four classical
binary schemes are tabulated below.  Carrying the integration analytically
turns the average into a single Mellin-Barnes integral at argument 1,

    ber = (q**p / 2) * prod x_l**m_l * (1/(2*pi*i)) *
          int (q + s)**-p * (-s)**-1 * prod (x_l - s)**-m_l ds,

expressed through the extended H-hat parameter block and evaluated by the
engine with no contour bend (there is no argument factor to exploit at
z = 1, the integrand decays like |t|**-(1 + p + sum m_l)).  For severe
fading, sum m_l <= 1.5, that power-law decay is too slow for tight
tolerances and :func:`ber` falls back to direct quadrature of the
defining average.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.integrate as _si
import scipy.special as _sp

from .errors import DomainError, NoConvergence
from .mellin import ContourSpec, EvalResult, GammaTermSpec, Slot, integrate_ln
from .sums import BranchParams, cdf, pdf, scaled_contour

log = logging.getLogger(__name__)

#: Total fading figure at or below which ber() prefers the quadrature route.
SEVERE_FADING_KAPPA = 1.5

_TABLE = {
    "CBFSK": (0.5, 0.5),
    "CBPSK": (0.5, 1.0),
    "NBFSK": (1.0, 0.5),
    "DBPSK": (1.0, 1.0),
}


@dataclass(frozen=True)
class Modulation:
    """Conditional-error-probability parameter pair of a binary scheme."""

    name: str
    p: float
    q: float

    def __post_init__(self):
        if not (self.p > 0 and self.q > 0):
            raise DomainError(f"modulation parameters must be positive, got p={self.p} q={self.q}")
        ref = _TABLE.get(self.name)
        if ref is not None and (self.p, self.q) != ref:
            raise DomainError(
                f"{self.name} carries the fixed parameters p={ref[0]}, q={ref[1]}"
            )

    @property
    def coherent(self) -> bool:
        return abs(self.p - 0.5) <= 1e-12

    @property
    def noncoherent(self) -> bool:
        return abs(self.p - 1.0) <= 1e-12


CBFSK = Modulation("CBFSK", 0.5, 0.5)
CBPSK = Modulation("CBPSK", 0.5, 1.0)
NBFSK = Modulation("NBFSK", 1.0, 0.5)
DBPSK = Modulation("DBPSK", 1.0, 1.0)

MODULATIONS = {m.name: m for m in (CBFSK, CBPSK, NBFSK, DBPSK)}


def modulation_by_name(name: str) -> Modulation:
    try:
        return MODULATIONS[name.upper()]
    except KeyError:
        raise DomainError(
            f"unknown modulation {name!r}; known schemes: {', '.join(sorted(MODULATIONS))}"
        ) from None


def custom_modulation(p: float, q: float) -> Modulation:
    return Modulation("CUSTOM", p, q)


def outage(params: BranchParams, y_th: float) -> float:
    """Probability that the combined SNR falls below the threshold y_th."""
    if y_th < 0:
        raise DomainError(f"outage threshold must be >= 0, got {y_th}")
    return cdf(params, y_th)


def cep(mod: Modulation, y) -> float:
    """Conditional error probability at instantaneous SNR y >= 0.

    Equals exp(-q*y)/2 for p = 1 and erfc(sqrt(q*y))/2 for p = 1/2;
    cep(0) is exactly 1/2.  Accepts scalars or arrays.
    """
    arr = np.asarray(y, dtype=float)
    if np.any(arr < 0):
        raise DomainError("conditional error probability needs y >= 0")
    out = 0.5 * _sp.gammaincc(mod.p, mod.q * arr)
    return float(out) if np.isscalar(y) or arr.ndim == 0 else out


def _ber_prefactor(params: BranchParams, mod: Modulation) -> float:
    return mod.q**mod.p / 2.0 * params.prefactor()


def _hhat_terms(params: BranchParams, mod: Modulation) -> list[GammaTermSpec]:
    p, q = mod.p, mod.q
    terms = [GammaTermSpec(1.0 - q, 1.0, p, Slot.NUM_UPPER)]
    for x, (m, _) in zip(params.rates, params.branches):
        terms.append(GammaTermSpec(1.0 + x, 1.0, m, Slot.DEN_UPPER))
    terms.append(GammaTermSpec(1.0, 1.0, 1.0, Slot.DEN_UPPER))
    terms.append(GammaTermSpec(0.0, 1.0, 1.0, Slot.NUM_LOWER))
    for x, (m, _) in zip(params.rates, params.branches):
        terms.append(GammaTermSpec(x, 1.0, m, Slot.NUM_LOWER))
    terms.append(GammaTermSpec(-q, 1.0, p, Slot.DEN_LOWER))
    return terms


def _integer_expanded_terms(params: BranchParams, mod: Modulation) -> list[GammaTermSpec]:
    # Same block with each branch triplet repeated m_l times at exponent 1;
    # only the modulation pair keeps the fractional exponent p.
    p, q = mod.p, mod.q
    terms = [GammaTermSpec(1.0 - q, 1.0, p, Slot.NUM_UPPER)]
    for x, (m, _) in zip(params.rates, params.branches):
        for _ in range(int(round(m))):
            terms.append(GammaTermSpec(1.0 + x, 1.0, 1.0, Slot.DEN_UPPER))
    terms.append(GammaTermSpec(1.0, 1.0, 1.0, Slot.DEN_UPPER))
    terms.append(GammaTermSpec(0.0, 1.0, 1.0, Slot.NUM_LOWER))
    for x, (m, _) in zip(params.rates, params.branches):
        for _ in range(int(round(m))):
            terms.append(GammaTermSpec(x, 1.0, 1.0, Slot.NUM_LOWER))
    terms.append(GammaTermSpec(-q, 1.0, p, Slot.DEN_LOWER))
    return terms


def ber_hhat_eval(
    params: BranchParams, mod: Modulation, contour: ContourSpec | None = None
) -> EvalResult:
    """General extended H-hat BER path, valid for any shape vector."""
    f = _ber_prefactor(params, mod)
    res = integrate_ln(_hhat_terms(params, mod), 0.0, scaled_contour(contour, f))
    return EvalResult(f * res.value, f * res.est_abs_error, res.n_evals, f * res.tail_bound)


def ber_integer_coherent(
    params: BranchParams, mod: Modulation, contour: ContourSpec | None = None
) -> float:
    """Integer-shape coherent-scheme BER (p = 1/2) via the expanded block."""
    if not params.all_integer:
        raise DomainError("ber_integer_coherent requires integer fading figures")
    if not mod.coherent:
        raise DomainError(f"ber_integer_coherent needs p = 1/2, got p={mod.p}")
    f = _ber_prefactor(params, mod)
    res = integrate_ln(_integer_expanded_terms(params, mod), 0.0, scaled_contour(contour, f))
    return f * res.value


def ber_integer_noncoherent(
    params: BranchParams, mod: Modulation, contour: ContourSpec | None = None
) -> float:
    """Integer-shape noncoherent-scheme BER (p = 1) via the Meijer-G block.

    Must agree with the closed product (1/2) * prod (1 + q*Omega_l/m_l)**-m_l.
    """
    if not params.all_integer:
        raise DomainError("ber_integer_noncoherent requires integer fading figures")
    if not mod.noncoherent:
        raise DomainError(f"ber_integer_noncoherent needs p = 1, got p={mod.p}")
    f = _ber_prefactor(params, mod)
    res = integrate_ln(_integer_expanded_terms(params, mod), 0.0, scaled_contour(contour, f))
    return f * res.value


def ber_quadrature_oracle(params: BranchParams, mod: Modulation, n_nodes: int = 200) -> float:
    """Average BER by direct adaptive quadrature of cep * pdf over (0, inf).

    The density behaves like y**(kappa - 1) at the origin and decays
    exponentially; the range is split at the mean so the endpoint
    behaviour and the tail are each handled by one adaptive call.
    ``n_nodes`` caps the subdivision depth per call.
    """
    mean, _ = params.mean_variance()

    # Work in units of the mean so the adaptive rules always face O(1)
    # features, whatever units the caller uses for the branch powers.
    def f(u: float) -> float:
        y = mean * u
        return cep(mod, y) * pdf(params, y) * mean

    limit = max(50, int(n_nodes))
    head, _ = _si.quad(f, 0.0, 1.0, epsabs=1e-13, epsrel=1e-9, limit=limit)
    tail, _ = _si.quad(f, 1.0, np.inf, epsabs=1e-13, epsrel=1e-9, limit=limit)
    return float(head + tail)


def ber(params: BranchParams, mod: Modulation) -> float:
    """Average BER of the MRC receiver for a binary modulation scheme.

    Severe total fading (sum m_l <= 1.5) is routed to the quadrature
    oracle, all-integer shapes to the matching expanded block, everything
    else to the general extended H-hat path.
    """
    if params.kappa <= SEVERE_FADING_KAPPA:
        log.info(
            "total fading figure %.3g <= %.2g: using direct conditional-error "
            "quadrature instead of the contour path",
            params.kappa,
            SEVERE_FADING_KAPPA,
        )
        return ber_quadrature_oracle(params, mod)
    try:
        if params.all_integer and mod.coherent:
            return ber_integer_coherent(params, mod)
        if params.all_integer and mod.noncoherent:
            return ber_integer_noncoherent(params, mod)
        return ber_hhat_eval(params, mod).value
    except NoConvergence:
        log.info("contour BER path did not converge; using quadrature fallback")
        return ber_quadrature_oracle(params, mod)


def ber_closed_form_noncoherent(params: BranchParams, mod: Modulation) -> float:
    """Closed product (1/2) * prod (1 + q*Omega_l/m_l)**-m_l, exact for p = 1."""
    if not mod.noncoherent:
        raise DomainError("the closed product form holds only for p = 1")
    out = 0.5
    for m, o in params.branches:
        out *= (1.0 + mod.q * o / m) ** (-m)
    return float(out)
