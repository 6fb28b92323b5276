"""Exact statistics of Y = sum of L independent Gamma variates.

Each branch l carries a Gamma variate with shape m_l and mean Omega_l
(scale Omega_l / m_l), the per-branch SNR of a Nakagami-m fading channel.
Writing x_l = m_l / Omega_l, the Laplace transform of Y is the product
prod (1 + s/x_l)**-m_l, and Bromwich inversion turns both the density and
the distribution function of Y into single Mellin-Barnes integrals over
quotients of Gamma powers:

    pdf(y) = prod x_l**m_l * (1/(2*pi*i)) * int prod (x_l + s)**-m_l e^{sy} ds
    cdf(y) = prod x_l**m_l * (1/(2*pi*i)) * int prod (x_l + s)**-m_l e^{sy} / s ds

with the cdf contour passing to the right of the origin so that the pole
of 1/s supplies the limiting value 1.  The engine receives these as
Gamma-term lists; for all-integer shapes an equivalent multiplicity-
expanded form with argument e^{-y} is dispatched instead, matching the
classical Meijer-G representation.  The integrand of the general form
decays like |t|**-(sum m_l), so for sum m_l <= 1 the vertical integral is
only conditionally convergent; the bent contour usually still converges
for y > 0 and the engine raises NoConvergence when it cannot.
"""

import dataclasses
import math
from dataclasses import dataclass

import numpy as np
import scipy.special as _sp

from .errors import DomainError, NoConvergence, OracleDiverged
from .mellin import ContourSpec, EvalResult, GammaTermSpec, Slot, integrate_ln

_INT_TOL = 1e-9


def scaled_contour(contour: ContourSpec | None, prefactor: float) -> ContourSpec:
    """Contour whose absolute tolerance applies after scaling by prefactor.

    The engine sees the bare integral; dividing the absolute floor by the
    prefactor makes the documented tolerances hold for the product the
    caller actually returns.  The relative tolerance is scale-free.
    """
    c = contour or ContourSpec()
    return dataclasses.replace(c, abs_tol=max(c.abs_tol / prefactor, 1e-300))


@dataclass(frozen=True)
class BranchParams:
    """Fading parameter set {(m_l, Omega_l)} defining one sum instance."""

    branches: tuple[tuple[float, float], ...]

    def __post_init__(self):
        branches = tuple((float(m), float(o)) for m, o in self.branches)
        if not branches:
            raise DomainError("at least one branch is required")
        for l, (m, o) in enumerate(branches):
            if not m > 0:
                raise DomainError(f"branch {l}: fading figure m must be positive, got {m}")
            if not o > 0:
                raise DomainError(f"branch {l}: mean power Omega must be positive, got {o}")
        object.__setattr__(self, "branches", branches)

    @classmethod
    def from_lists(cls, m, omega) -> "BranchParams":
        m = list(m)
        omega = list(omega)
        if len(m) != len(omega):
            raise DomainError(f"{len(m)} fading figures but {len(omega)} mean powers")
        return cls(tuple(zip(m, omega)))

    @property
    def L(self) -> int:
        return len(self.branches)

    @property
    def kappa(self) -> float:
        """Total fading figure, sum of the branch shapes."""
        return float(sum(m for m, _ in self.branches))

    @property
    def all_integer(self) -> bool:
        return all(abs(m - round(m)) <= _INT_TOL for m, _ in self.branches)

    @property
    def rates(self) -> tuple[float, ...]:
        """Inverse scales x_l = m_l / Omega_l."""
        return tuple(m / o for m, o in self.branches)

    def mean_variance(self) -> tuple[float, float]:
        mean = sum(o for _, o in self.branches)
        var = sum(o * o / m for m, o in self.branches)
        return float(mean), float(var)

    def prefactor(self) -> float:
        """prod (m_l / Omega_l)**m_l, the constant in front of every integral."""
        return float(np.prod([x**m for x, (m, _) in zip(self.rates, self.branches)]))


def _general_terms(params: BranchParams, with_cdf_pair: bool) -> list[GammaTermSpec]:
    terms = []
    for x, (m, _) in zip(params.rates, params.branches):
        terms.append(GammaTermSpec(1.0 - x, 1.0, m, Slot.NUM_UPPER))
        terms.append(GammaTermSpec(-x, 1.0, m, Slot.DEN_LOWER))
    if with_cdf_pair:
        terms.append(GammaTermSpec(1.0, 1.0, 1.0, Slot.NUM_UPPER))
        terms.append(GammaTermSpec(0.0, 1.0, 1.0, Slot.DEN_LOWER))
    return terms


def _integer_terms(params: BranchParams, with_cdf_pair: bool) -> list[GammaTermSpec]:
    terms = []
    for x, (m, _) in zip(params.rates, params.branches):
        for _ in range(int(round(m))):
            terms.append(GammaTermSpec(1.0 + x, 1.0, 1.0, Slot.DEN_UPPER))
            terms.append(GammaTermSpec(x, 1.0, 1.0, Slot.NUM_LOWER))
    if with_cdf_pair:
        terms.append(GammaTermSpec(1.0, 1.0, 1.0, Slot.DEN_UPPER))
        terms.append(GammaTermSpec(0.0, 1.0, 1.0, Slot.NUM_LOWER))
    return terms


def _scaled(res: EvalResult, factor: float) -> EvalResult:
    return EvalResult(
        value=factor * res.value,
        est_abs_error=factor * res.est_abs_error,
        n_evals=res.n_evals,
        tail_bound=factor * res.tail_bound,
    )


def _normalized(params: BranchParams) -> tuple[BranchParams, float]:
    """Rescale the branch means to total 1 (Gamma scale family).

    The sum statistics are scale-covariant, pdf(y; Omega) =
    pdf(y/c; Omega/c)/c, so the engine can always work at unit mean where
    the pole strip and the contour are well conditioned, whatever units
    the caller uses.
    """
    c, _ = params.mean_variance()
    if c == 1.0:
        return params, 1.0
    scaled = BranchParams(tuple((m, o / c) for m, o in params.branches))
    return scaled, c


#: Largest max_l(x_l * y), in mean-normalized units, served by the series.
_SERIES_U_MAX = 1.0
_SERIES_MAX_SHELLS = 500
_EPS = float(np.finfo(float).eps)


def _series_eval(norm: BranchParams, y: float, want_cdf: bool) -> EvalResult:
    """Density or distribution near the origin via the confluent power series.

    The transform inversion integrand cancels catastrophically when the
    target value is far below the integrand magnitude, which happens
    exactly as y -> 0 where pdf ~ y**(kappa-1).  There the entire-function
    series in powers of (-x_l * y) is the well-conditioned representation:
    its shell coefficients are generated by prod (1 - v_l t)**-m_l and
    obey the power-sum recurrence n*s_n = sum p_k s_(n-k).
    """
    xs = np.array(norm.rates)
    ms = np.array([m for m, _ in norm.branches])
    kappa = norm.kappa
    v = -xs * y
    # n-th term weight: Gamma(kappa)/Gamma(kappa+n) for the density,
    # Gamma(kappa+1)/(Gamma(kappa+n)*(kappa+n)) for the integrated series
    lg_base = math.lgamma(kappa + 1.0) if want_cdf else math.lgamma(kappa)

    shells = [1.0]
    p_pow = np.ones_like(v)
    p = []
    total = 1.0
    abs_total = 1.0
    tail = math.inf
    last = 1.0
    quiet = 0
    n = 0
    for n in range(1, _SERIES_MAX_SHELLS):
        p_pow = p_pow * v
        p.append(float((ms * p_pow).sum()))
        s_n = sum(p[k] * shells[n - 1 - k] for k in range(n)) / n
        shells.append(s_n)
        weight = math.exp(lg_base - math.lgamma(kappa + n))
        if want_cdf:
            weight /= kappa + n
        last = s_n * weight
        total += last
        abs_total += abs(last)
        if abs(last) <= 1e-18 * max(abs(total), 1e-300):
            quiet += 1
            if quiet >= 3:
                tail = 2.0 * abs(last)
                break
        else:
            quiet = 0
    else:
        raise NoConvergence(
            f"series for the small-argument density did not settle in "
            f"{_SERIES_MAX_SHELLS} shells (y={y})"
        )

    if want_cdf:
        ln_pref = float((ms * np.log(xs)).sum()) + kappa * math.log(y) - math.lgamma(kappa + 1.0)
    else:
        ln_pref = float((ms * np.log(xs)).sum()) + (kappa - 1.0) * math.log(y) - lg_base
    pref = math.exp(ln_pref)
    est = pref * (8.0 * _EPS * abs_total + tail)
    return EvalResult(value=pref * total, est_abs_error=est, n_evals=n + 1, tail_bound=pref * tail)


def pdf_eval(
    params: BranchParams,
    y: float,
    *,
    force_general: bool = False,
    contour: ContourSpec | None = None,
) -> EvalResult:
    """Density of Y at y > 0, with error diagnostics.

    All-integer shape vectors dispatch to the multiplicity-expanded
    integer form unless ``force_general`` routes them through the general
    fractional-power form (used for cross-path equivalence checks).
    """
    if not y > 0:
        raise DomainError(f"pdf is defined for y > 0, got y={y}")
    norm, c = _normalized(params)
    if contour is None and not force_general and max(norm.rates) * (y / c) <= _SERIES_U_MAX:
        return _scaled(_series_eval(norm, y / c, want_cdf=False), 1.0 / c)
    pref = norm.prefactor() / c
    contour = scaled_contour(contour, pref)
    if params.all_integer and not force_general:
        res = integrate_ln(_integer_terms(norm, False), -y / c, contour)
    else:
        res = integrate_ln(_general_terms(norm, False), y / c, contour)
    return _scaled(res, pref)


def pdf(params: BranchParams, y: float, *, force_general: bool = False) -> float:
    """Density of the sum at y > 0."""
    return pdf_eval(params, y, force_general=force_general).value


def pdf_integer(params: BranchParams, y: float, contour: ContourSpec | None = None) -> float:
    """Integer-shape density via the multiplicity-expanded Meijer-G form."""
    if not params.all_integer:
        raise DomainError("pdf_integer requires every fading figure to be an integer")
    if not y > 0:
        raise DomainError(f"pdf_integer is defined for y > 0, got y={y}")
    norm, c = _normalized(params)
    pref = norm.prefactor() / c
    res = integrate_ln(_integer_terms(norm, False), -y / c, scaled_contour(contour, pref))
    return pref * res.value


def cdf_eval(
    params: BranchParams,
    y: float,
    *,
    force_general: bool = False,
    contour: ContourSpec | None = None,
) -> EvalResult:
    """P(Y <= y) for y >= 0, with error diagnostics.

    y = 0 returns exactly 0 by definition of the support.
    """
    if y < 0:
        raise DomainError(f"cdf is defined for y >= 0, got y={y}")
    if y == 0:
        return EvalResult(value=0.0, est_abs_error=0.0, n_evals=0, tail_bound=0.0)
    norm, c = _normalized(params)
    if contour is None and not force_general and max(norm.rates) * (y / c) <= _SERIES_U_MAX:
        return _series_eval(norm, y / c, want_cdf=True)
    pref = norm.prefactor()
    contour = scaled_contour(contour, pref)
    if params.all_integer and not force_general:
        res = integrate_ln(_integer_terms(norm, True), -y / c, contour)
    else:
        res = integrate_ln(_general_terms(norm, True), y / c, contour)
    return _scaled(res, pref)


def cdf(params: BranchParams, y: float, *, force_general: bool = False) -> float:
    """Distribution function of the sum at y >= 0."""
    return cdf_eval(params, y, force_general=force_general).value


def cdf_single(m: float, omega: float, gamma: float, *, method: str = "direct") -> float:
    """Distribution function of a single Gamma variate.

    ``direct`` uses the regularized lower incomplete Gamma function
    P(m, m*gamma/omega); ``meijerg`` routes an integer-shape branch
    through the contour engine.  The two agree to 1e-10.
    """
    if not (m > 0 and omega > 0):
        raise DomainError("shape and mean power must be positive")
    if gamma < 0:
        raise DomainError(f"cdf_single is defined for gamma >= 0, got {gamma}")
    if method == "direct":
        return float(_sp.gammainc(m, m * gamma / omega))
    if method == "meijerg":
        return cdf(BranchParams(((m, omega),), ), gamma, force_general=False)
    raise DomainError(f"unknown cdf_single method {method!r}")


def pdf_lauricella_oracle(
    params: BranchParams, y: float, max_terms: int = 80
) -> tuple[float, float]:
    """Density via the truncated confluent multivariate hypergeometric series.

    Literal L-fold power series in the arguments -x_l * y, summed shell by
    shell in the total degree; intended purely as a small-L test oracle
    for :func:`pdf`.  Returns the truncated value and a crude geometric
    bound on the dropped tail.

    Raises:
        OracleDiverged: if the shell magnitudes are still growing when the
            term budget runs out.
    """
    if params.L > 3:
        raise DomainError("the series oracle is restricted to L <= 3")
    if not y > 0:
        raise DomainError(f"oracle is defined for y > 0, got y={y}")
    if max_terms < 4:
        raise DomainError("max_terms must be at least 4")

    ms = [m for m, _ in params.branches]
    us = [-x * y for x in params.rates]
    c = params.kappa
    n_shells = int(max_terms)

    # coeff_l[i] = poch(m_l, i) * u_l**i / i!
    coeff = []
    for m, u in zip(ms, us):
        col = np.empty(n_shells)
        col[0] = 1.0
        for i in range(1, n_shells):
            col[i] = col[i - 1] * (m + i - 1) * u / i
        coeff.append(col)

    poch_c = np.empty(n_shells)
    poch_c[0] = 1.0
    for n in range(1, n_shells):
        poch_c[n] = poch_c[n - 1] * (c + n - 1)

    shells = np.zeros(n_shells)
    if params.L == 1:
        shells = coeff[0] / poch_c
    elif params.L == 2:
        for n in range(n_shells):
            inner = sum(coeff[0][i] * coeff[1][n - i] for i in range(n + 1))
            shells[n] = inner / poch_c[n]
    else:
        for n in range(n_shells):
            inner = 0.0
            for i in range(n + 1):
                for j in range(n - i + 1):
                    inner += coeff[0][i] * coeff[1][j] * coeff[2][n - i - j]
            shells[n] = inner / poch_c[n]

    tail_mag = abs(shells[-1])
    prev_mag = max(abs(shells[-2]), 1e-300)
    ratio = tail_mag / prev_mag
    if ratio >= 1.0:
        raise OracleDiverged(
            f"series shells still growing at n={n_shells - 1} (ratio {ratio:.3g}); "
            "increase max_terms"
        )

    prefactor = params.prefactor() * y ** (c - 1.0) / _sp.gamma(c)
    value = float(prefactor * shells.sum())
    bound = float(prefactor * tail_mag * ratio / (1.0 - ratio))
    return value, bound
