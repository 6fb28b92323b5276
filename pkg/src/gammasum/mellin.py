"""Mellin-Barnes contour integration engine.

Evaluates

    (1 / (2*pi*i)) * integral_C  M(s) * z**s  ds

where M(s) is a quotient of Gamma-function powers assembled from
:class:`GammaTermSpec` entries,

    M(s) =   prod over NUM_UPPER  Gamma(1 - alpha + A*s)**a
           * prod over NUM_LOWER  Gamma(beta - B*s)**b
           / prod over DEN_UPPER  Gamma(alpha - A*s)**a
           / prod over DEN_LOWER  Gamma(1 - beta + B*s)**b

and an empty product is 1.  The numerator factors contribute two pole
families on the real axis: NUM_LOWER poles at s = (beta + k)/B running
right, NUM_UPPER poles at s = (alpha - 1 - k)/A running left.  In the
mirror coordinate r = -Re(s) the admissible separating abscissas form the
open interval returned by :func:`pole_strip`; a vertical line at
Re(s) = -R with r_min < R < r_max keeps each family on its proper side.

The integration path is a three-segment staple: a vertical segment at the
anchor abscissa truncated at |Im s| = height, plus two horizontal bends
toward the side on which z**s decays (left for z > 1, right for z < 1,
no bend for z = 1).  All Gamma poles sit on the real axis, so the
off-axis bends cross no singularity and the staple value is independent
of the truncation height; the dropped closure beyond the bend tips is
covered by an explicit tail bound.  Height, bend depth and quadrature
are refined together until the combined error estimate meets the
requested tolerance.

Gamma quotients of the form Gamma(w)**e / Gamma(w + 1)**e are folded into
w**-e before evaluation whenever Re(w) > 0 at the anchor.  The fold is an
exact identity there and avoids forming huge Gamma values at large
|Im s|; the unreduced log-Gamma route remains available for testing via
``reduce_pairs=False``.
"""

import enum
import logging
import math
from dataclasses import dataclass

import numpy as np

from .cgamma import POLE_TOL, _pole_distance, log_gamma_vec
from .errors import DomainError, InconsistentCoefficients, NoConvergence, PoleError

log = logging.getLogger(__name__)

_TAIL_SAFETY = 4.0
_MAX_PANELS = 8192


class Slot(enum.Enum):
    """Which of the four Gamma-product positions a term occupies."""

    NUM_UPPER = "num_upper"  # Gamma(1 - alpha + A*s)**a
    NUM_LOWER = "num_lower"  # Gamma(beta - B*s)**b
    DEN_UPPER = "den_upper"  # Gamma(alpha - A*s)**a
    DEN_LOWER = "den_lower"  # Gamma(1 - beta + B*s)**b


@dataclass(frozen=True)
class GammaTermSpec:
    """One Gamma factor: offset (alpha or beta), positive scale, positive exponent."""

    alpha: float
    scale: float
    exponent: float
    slot: Slot

    def __post_init__(self):
        if not self.scale > 0:
            raise DomainError(f"Gamma term scale must be positive, got {self.scale}")
        if not self.exponent > 0:
            raise DomainError(f"Gamma term exponent must be positive, got {self.exponent}")
        if self.slot not in Slot:
            raise DomainError(f"unknown slot {self.slot!r}")


@dataclass(frozen=True)
class ContourSpec:
    """Contour geometry and stopping tolerances for one evaluation.

    ``anchor`` is the abscissa Re(s) of the vertical segment; ``None``
    selects it automatically from the pole strip (the mirrored strip
    midpoint, nudged right of any branch points of folded quotients).
    ``bend_depth`` is the abscissa the horizontal bends reach at
    |Im s| = height; ``None`` places it 49 units into the decay side,
    and it must lie on the decay side when given explicitly.
    """

    anchor: float | None = None
    height: float = 100.0
    bend_depth: float | None = None
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12
    max_refinements: int = 12

    def __post_init__(self):
        if not self.height > 0:
            raise DomainError(f"contour height must be positive, got {self.height}")
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise DomainError("contour tolerances must be positive")
        if self.max_refinements < 0:
            raise DomainError("max_refinements must be >= 0")


@dataclass(frozen=True)
class EvalResult:
    """Value of a contour integral plus its error diagnostics."""

    value: float
    est_abs_error: float
    n_evals: int
    tail_bound: float


def pole_strip(terms) -> tuple[float, float]:
    """Admissible strip (r_min, r_max) for the separating abscissa R = -Re(s).

    r_min is the largest -beta/B over NUM_LOWER terms (-inf if none),
    r_max the smallest (1 - alpha)/A over NUM_UPPER terms (+inf if none).
    A one-sided strip is closed with the fallback width 1 below or 0.1
    above; a term list with no numerator entries has no pole constraint
    and yields (-inf, +inf).

    Raises:
        InconsistentCoefficients: if r_min >= r_max after the fallbacks.
    """
    terms = list(terms)
    if not terms:
        raise DomainError("pole_strip needs at least one term")
    r_min, r_max = -math.inf, math.inf
    for t in terms:
        if t.slot is Slot.NUM_LOWER:
            r_min = max(r_min, -t.alpha / t.scale)
        elif t.slot is Slot.NUM_UPPER:
            r_max = min(r_max, (1.0 - t.alpha) / t.scale)
    if math.isinf(r_min) and not math.isinf(r_max):
        r_min = r_max - 1.0
    if math.isinf(r_max) and not math.isinf(r_min):
        r_max = r_min + 0.1
    if r_min >= r_max:
        raise InconsistentCoefficients(
            f"no contour separates the pole families: strip ({r_min}, {r_max})"
        )
    return (r_min, r_max)


def _term_factors(terms):
    """Split terms into numerator/denominator factor lists of (c0, c1, e).

    Each factor stands for Gamma(c0 + c1*s)**e.
    """
    num, den = [], []
    for t in terms:
        if t.slot is Slot.NUM_UPPER:
            num.append((1.0 - t.alpha, t.scale, t.exponent))
        elif t.slot is Slot.NUM_LOWER:
            num.append((t.alpha, -t.scale, t.exponent))
        elif t.slot is Slot.DEN_UPPER:
            den.append((t.alpha, -t.scale, t.exponent))
        else:
            den.append((1.0 - t.alpha, t.scale, t.exponent))
    return num, den


def _match_pairs(num, den):
    """Pair numerator factors with denominator factors shifted by exactly +1.

    Gamma(w)**e / Gamma(w + 1)**e = w**-e, so a numerator (c0, c1, e) and a
    denominator (c0 + 1, c1, e) collapse to the power factor (c0 + c1*s)**-e.
    Returns (pairs, leftover_num, leftover_den).
    """
    pairs = []
    left_num = []
    used = [False] * len(den)
    for c0, c1, e in num:
        hit = None
        for k, (d0, d1, de) in enumerate(den):
            if used[k]:
                continue
            if (
                abs(d1 - c1) <= 1e-12 * (1.0 + abs(c1))
                and abs(de - e) <= 1e-12 * (1.0 + abs(e))
                and abs(d0 - (c0 + 1.0)) <= 1e-12 * (1.0 + abs(c0))
            ):
                hit = k
                break
        if hit is None:
            left_num.append((c0, c1, e))
        else:
            used[hit] = True
            pairs.append((c0, c1, e))
    left_den = [f for k, f in enumerate(den) if not used[k]]
    return pairs, left_num, left_den


def _default_anchor(terms, strip, ln_z: float = 0.0) -> float:
    """Abscissa minimizing the integrand magnitude on the real axis.

    The admissible abscissas form the mirror image of the pole strip.  The
    integrand magnitude |M(sigma) * z**sigma| is log-convex there for the
    quotients in use, diverging at any strip edge formed by a numerator
    pole, so its minimizer is the natural anchor: it suppresses the
    oscillation-versus-cancellation blowup that a mid-strip abscissa
    suffers for large arguments and automatically keeps clear of branch
    points of folded quotients.
    """
    r_min, r_max = strip
    if math.isinf(r_min) and math.isinf(r_max):
        return 0.0
    lo, hi = -r_max, -r_min
    width = hi - lo
    num, den = _term_factors(terms)
    factors = [(e, c0, c1) for c0, c1, e in num] + [(-e, c0, c1) for c0, c1, e in den]

    def g(sigma: np.ndarray) -> np.ndarray:
        acc = ln_z * sigma
        for e, c0, c1 in factors:
            with np.errstate(invalid="ignore"):
                acc = acc + e * np.real(log_gamma_vec(c0 + c1 * sigma + 0j))
        return acc

    a, b = lo + 0.01 * width, hi - 0.01 * width
    grid = np.linspace(a, b, 33)
    vals = g(grid)
    vals = np.where(np.isfinite(vals), vals, math.inf)
    k = int(np.argmin(vals))
    a, b = grid[max(0, k - 1)], grid[min(len(grid) - 1, k + 1)]
    # golden-section polish; the target is well-conditioned, a rough
    # minimum is entirely sufficient
    phi = 0.5 * (3.0 - math.sqrt(5.0))
    x1, x2 = a + phi * (b - a), b - phi * (b - a)
    f1, f2 = float(g(np.array([x1]))[0]), float(g(np.array([x2]))[0])
    for _ in range(24):
        if f1 <= f2:
            b, x2, f2 = x2, x1, f1
            x1 = a + phi * (b - a)
            f1 = float(g(np.array([x1]))[0])
        else:
            a, x1, f1 = x1, x2, f2
            x2 = b - phi * (b - a)
            f2 = float(g(np.array([x2]))[0])
    return float(0.5 * (a + b))


class _CompiledIntegrand:
    """Vectorized evaluator for M(s) * z**s with decay-rate bookkeeping."""

    def __init__(self, lg, pw, ln_z):
        self.lg_coef = np.array([c for c, _, _ in lg], dtype=float)
        self.lg_c0 = np.array([c0 for _, c0, _ in lg], dtype=float)
        self.lg_c1 = np.array([c1 for _, _, c1 in lg], dtype=float)
        self.pw_exp = np.array([e for e, _, _ in pw], dtype=float)
        self.pw_c0 = np.array([c0 for _, c0, _ in pw], dtype=float)
        self.pw_c1 = np.array([c1 for _, _, c1 in pw], dtype=float)
        self.ln_z = float(ln_z)

    def __call__(self, s):
        s = np.asarray(s, dtype=complex)
        acc = self.ln_z * s
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            if self.lg_coef.size:
                w = self.lg_c0[:, None] + self.lg_c1[:, None] * s[None, :]
                acc = acc + (self.lg_coef[:, None] * log_gamma_vec(w)).sum(axis=0)
            if self.pw_exp.size:
                w = self.pw_c0[:, None] + self.pw_c1[:, None] * s[None, :]
                acc = acc - (self.pw_exp[:, None] * np.log(w)).sum(axis=0)
            return np.exp(acc)

    def power_decay(self, sigma: float) -> float:
        """Exponent kappa with |M(sigma + i t)| = O(|t|**-kappa) as |t| grows."""
        p = float(self.pw_exp.sum())
        if self.lg_coef.size:
            p -= float((self.lg_coef * (self.lg_c0 + self.lg_c1 * sigma - 0.5)).sum())
        return p

    def exp_decay(self) -> float:
        """Net exponential rate Q: |M| gains a factor exp(-pi*Q*|t|/2)."""
        if not self.lg_coef.size:
            return 0.0
        return float((self.lg_coef * np.abs(self.lg_c1)).sum())

    def horizontal_rate(self) -> float:
        """Net factorial rate E along the real direction.

        Moving the abscissa by dx multiplies |M| by roughly |x|**(E*dx):
        E > 0 means factorial growth rightward (and decay leftward), E < 0
        the reverse, E = 0 a balanced quotient that is power-law both ways.
        Folded power factors are power-law and contribute nothing.
        """
        if not self.lg_coef.size:
            return 0.0
        return float((self.lg_coef * self.lg_c1).sum())


def _compile(terms, anchor: float, ln_z: float, reduce_pairs: bool = True):
    num, den = _term_factors(terms)
    lg, pw = [], []
    pairs, left_num, left_den = _match_pairs(num, den)
    for c0, c1, e in pairs:
        # The fold is exact only when w = c0 + c1*s stays off the branch cut;
        # the path crosses the real axis at the anchor, so require Re(w) > 0 there.
        if reduce_pairs and (c0 + c1 * anchor) > 0.0:
            pw.append((e, c0, c1))
        else:
            lg.append((e, c0, c1))
            lg.append((-e, c0 + 1.0, c1))
    for c0, c1, e in left_num:
        lg.append((e, c0, c1))
    for c0, c1, e in left_den:
        lg.append((-e, c0, c1))
    return _CompiledIntegrand(lg, pw, ln_z)


def integrand(terms, z: float, s: complex) -> complex:
    """The raw integrand M(s) * z**s at a single point.

    Raises PoleError if s sits on a pole of a numerator factor; a pole of a
    denominator factor makes the quotient vanish and returns 0.
    """
    if not z > 0:
        raise DomainError(f"argument z must be positive, got {z}")
    s = complex(s)
    num, den = _term_factors(terms)
    acc = s * math.log(z)
    for c0, c1, e in num:
        w = c0 + c1 * s
        if w.real <= 0.5 and _pole_distance(w) < POLE_TOL:
            raise PoleError(f"integrand numerator Gamma({w}) is at a pole")
        acc += e * complex(log_gamma_vec(w))
    for c0, c1, e in den:
        w = c0 + c1 * s
        if w.real <= 0.5 and _pole_distance(w) < POLE_TOL:
            return 0.0  # reciprocal of a Gamma pole
        acc -= e * complex(log_gamma_vec(w))
    return complex(np.exp(acc))


# 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1]
# (abscissas ascending; Gauss points are every second Kronrod point).
_GK_NODES_HALF = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
    ]
)
_GK_W_HALF = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
    ]
)
_GK_NODES = np.concatenate([-_GK_NODES_HALF, [0.0], _GK_NODES_HALF[::-1]])
_GK_WEIGHTS = np.concatenate(
    [_GK_W_HALF, [0.209482141084727828012999174891714], _GK_W_HALF[::-1]]
)
_G_W_HALF = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
    ]
)
_G_WEIGHTS = np.concatenate([_G_W_HALF, [0.417959183673469387755102040816327], _G_W_HALF[::-1]])


def _graded_breaks(hot: str, n_levels: int):
    """Panel breakpoints on [0, 1] geometrically graded toward the hot spot."""
    fr = 0.5 ** np.arange(1, n_levels + 1)
    if hot == "center":
        pts = np.concatenate([[0.0, 1.0], 0.5 - 0.5 * fr, 0.5 + 0.5 * fr, [0.5]])
    elif hot == "start":
        pts = np.concatenate([[0.0, 1.0], fr])
    else:  # "end"
        pts = np.concatenate([[0.0, 1.0], 1.0 - fr])
    return np.unique(pts)


def _integrate_path(f, segments, tol_fn, max_panels=_MAX_PANELS):
    """Adaptive Gauss-Kronrod quadrature over a list of straight segments.

    ``segments`` is a list of (a, b, breaks); the target is a combined
    absolute tolerance on the path integral, supplied by ``tol_fn`` as a
    function of the current |value| so that relative targets can be used
    before the value is known.  Returns (integral, err_estimate, n_evals).
    """
    seg_a = np.array([a for a, _, _ in segments], dtype=complex)
    seg_d = np.array([b - a for a, b, _ in segments], dtype=complex)

    x0, x1, seg = [], [], []
    for k, (_, _, breaks) in enumerate(segments):
        x0.extend(breaks[:-1])
        x1.extend(breaks[1:])
        seg.extend([k] * (len(breaks) - 1))
    x0 = np.array(x0)
    x1 = np.array(x1)
    seg = np.array(seg, dtype=int)

    def evaluate(x0e, x1e, sege):
        mid = 0.5 * (x0e + x1e)
        half = 0.5 * (x1e - x0e)
        xs = mid[:, None] + half[:, None] * _GK_NODES[None, :]
        ss = seg_a[sege][:, None] + seg_d[sege][:, None] * xs
        vals = f(ss.ravel()).reshape(ss.shape)
        ik = (vals * _GK_WEIGHTS).sum(axis=1) * half
        ig = (vals[:, 1::2] * _G_WEIGHTS).sum(axis=1) * half
        contrib = seg_d[sege] * ik
        err = np.abs(seg_d[sege]) * np.abs(ik - ig)
        return contrib, err

    contrib, err = evaluate(x0, x1, seg)
    n_evals = 15 * len(x0)

    while True:
        total = contrib.sum()
        if not np.isfinite(total):
            return total, math.inf, n_evals
        tol = tol_fn(abs(total) / (2.0 * math.pi))
        if err.sum() <= tol * 2.0 * math.pi or len(x0) >= max_panels:
            break
        n_split = max(1, len(x0) // 8)
        worst = np.argsort(err)[-n_split:]
        keep = np.ones(len(x0), dtype=bool)
        keep[worst] = False
        mid = 0.5 * (x0[worst] + x1[worst])
        nx0 = np.concatenate([x0[worst], mid])
        nx1 = np.concatenate([mid, x1[worst]])
        nseg = np.concatenate([seg[worst], seg[worst]])
        ncontrib, nerr = evaluate(nx0, nx1, nseg)
        n_evals += 15 * len(nx0)
        x0 = np.concatenate([x0[keep], nx0])
        x1 = np.concatenate([x1[keep], nx1])
        seg = np.concatenate([seg[keep], nseg])
        contrib = np.concatenate([contrib[keep], ncontrib])
        err = np.concatenate([err[keep], nerr])

    return contrib.sum(), float(err.sum()), n_evals


def _tail_bound(comp, tip_x: float, height: float) -> float:
    """Over-estimate of the dropped closure integral beyond the bend tips.

    The dropped pieces are the two vertical rays |Im s| > height at the tip
    abscissa.  Their size is bounded by the integrand magnitude at the tips
    times the fastest available decay scale: power-law |t|**-kappa from the
    Gamma quotient, oscillation 1/|ln z| of the argument factor, or net
    exponential Gamma decay.  The power exponent is the smaller of the
    asymptotic value and the decay actually measured between the heights T
    and 2T; Gamma factors with very large offsets are locally flat long
    before their asymptotic rate applies, and trusting the asymptotic
    exponent there would silently truncate too early.  Infinite when no
    decay mechanism applies.
    """
    tips = np.array([tip_x + 1j * height, tip_x - 1j * height])
    mag = float(np.abs(comp(tips)).sum())
    if mag == 0.0:
        return 0.0
    mag2 = float(np.abs(comp(2.0 * tips.imag * 1j + tip_x)).sum())
    kappa = comp.power_decay(tip_x)
    if mag2 > 0.0:
        kappa = min(kappa, math.log2(mag / mag2))
    scales = []
    if kappa > 1.05:
        scales.append(height / (kappa - 1.0))
    if abs(comp.ln_z) > 0.0:
        scales.append(2.0 / abs(comp.ln_z))
    q = comp.exp_decay()
    if q > 1e-12:
        scales.append(2.0 / (math.pi * q))
    if not scales:
        return math.inf
    return _TAIL_SAFETY * mag * min(scales)


def _resolve_anchor(terms, contour: ContourSpec, strip, ln_z: float) -> float:
    if contour.anchor is None:
        return _default_anchor(terms, strip, ln_z)
    anchor = float(contour.anchor)
    r_min, r_max = strip
    if not (r_min < -anchor < r_max):
        raise DomainError(
            f"anchor {anchor} lies outside the admissible strip: "
            f"-anchor must be in ({r_min}, {r_max})"
        )
    return anchor


def _integrate_ln_core(terms, ln_z, contour=None, reduce_pairs=True):
    """Run the staple-contour evaluation; returns the complex value."""
    terms = list(terms)
    if not terms:
        raise DomainError("integrate needs at least one Gamma term")
    contour = contour or ContourSpec()
    strip = pole_strip(terms)
    anchor = _resolve_anchor(terms, contour, strip, ln_z)
    comp = _compile(terms, anchor, ln_z, reduce_pairs=reduce_pairs)

    q_rate = comp.exp_decay()
    e_rate = comp.horizontal_rate()
    if q_rate < -1e-12:
        raise NoConvergence("integrand grows exponentially along any vertical line")

    # A bend helps only when the integrand decays along it: either through
    # the argument factor z**s (side opposite to the sign of ln z) or through
    # factorial Gamma decay.  A side with net factorial growth is forbidden,
    # and with net exponential vertical decay (q_rate > 0) no bend is needed.
    def _side_safe(d: float) -> bool:
        return d * e_rate <= 1e-12

    side = 0.0
    if contour.bend_depth is not None and contour.bend_depth == anchor:
        offset = 0.0  # bend explicitly disabled
    elif contour.bend_depth is not None:
        d = math.copysign(1.0, contour.bend_depth - anchor)
        if not _side_safe(d):
            raise DomainError(
                f"bend_depth {contour.bend_depth} lies on the factorial-growth side "
                f"of anchor {anchor}"
            )
        if d * ln_z > 0:
            raise DomainError(
                f"bend_depth {contour.bend_depth} lies on the growth side of "
                f"anchor {anchor} for ln z = {ln_z}"
            )
        side = d
        offset = abs(contour.bend_depth - anchor)
    else:
        offset = 49.0
        if q_rate <= 1e-12 and ln_z != 0.0:
            d = -math.copysign(1.0, ln_z)
            if _side_safe(d):
                side = d
                # The closure beyond the bend tips shrinks like exp(-offset*|ln z|),
                # so small arguments need proportionally deeper bends.
                offset = max(offset, 40.0 / abs(ln_z))

    height = contour.height
    n_evals = 0
    value = math.nan
    est = math.inf
    tail = math.inf

    def tol_fn(v):
        return 0.5 * max(contour.abs_tol, contour.rel_tol * v)

    for _ in range(contour.max_refinements + 1):
        v_levels = min(24, max(6, int(math.log2(height)) + 2))
        if side != 0.0 and offset > 0.0:
            tip = anchor + side * offset
            h_levels = min(24, max(4, int(math.log2(max(offset, 2.0))) + 2))
            segments = [
                (tip - 1j * height, anchor - 1j * height, _graded_breaks("end", h_levels)),
                (anchor - 1j * height, anchor + 1j * height, _graded_breaks("center", v_levels)),
                (anchor + 1j * height, tip + 1j * height, _graded_breaks("start", h_levels)),
            ]
            tip_x = tip
        else:
            segments = [
                (anchor - 1j * height, anchor + 1j * height, _graded_breaks("center", v_levels))
            ]
            tip_x = anchor
        raw, qerr, nev = _integrate_path(comp, segments, tol_fn)
        n_evals += nev + 2
        if not np.isfinite(raw):
            raise NoConvergence(
                "integrand overflowed on the contour; the bend or the parameters "
                "are inadmissible"
            )
        tail = _tail_bound(comp, tip_x, height)
        value = raw / (2j * math.pi)
        est = qerr / (2.0 * math.pi) + tail / (2.0 * math.pi)
        if np.isfinite(value) and est <= max(contour.abs_tol, contour.rel_tol * abs(value)):
            return value, est, n_evals, tail / (2.0 * math.pi)
        height *= 2.0
        offset *= 2.0
        log.debug(
            "contour refinement: height=%g offset=%g est=%g value=%s", height, offset, est, value
        )

    raise NoConvergence(
        f"contour integral did not converge: estimate {est:g} exceeds tolerance "
        f"after {contour.max_refinements} refinements (value ~ {value})"
    )


def integrate_ln(terms, ln_z: float, contour: ContourSpec | None = None) -> EvalResult:
    """Contour integral with the argument passed as ln z.

    Large arguments never need to be exponentiated: z**s is formed as
    exp(s * ln_z) inside the integrand, so ln_z may be any real number.
    """
    contour = contour or ContourSpec()
    value, est, n_evals, tail = _integrate_ln_core(terms, ln_z, contour)
    if abs(value.imag) > max(1e-8, 1e-6 * abs(value.real)):
        raise NoConvergence(
            f"imaginary residue {value.imag:g} is too large for a real-valued target "
            f"(real part {value.real:g})"
        )
    return EvalResult(
        value=float(value.real), est_abs_error=est, n_evals=n_evals, tail_bound=tail
    )


def integrate(terms, z: float, contour: ContourSpec | None = None) -> EvalResult:
    """Contour integral (1/(2*pi*i)) * integral M(s) z**s ds for real z > 0."""
    if not z > 0:
        raise DomainError(f"argument z must be positive, got {z}")
    return integrate_ln(terms, math.log(z), contour)
