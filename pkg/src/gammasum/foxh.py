"""Typed front-end for the Meijer G / Fox H / Fox H-bar / extended H-hat family.

The four function classes share one Mellin-Barnes integrand; they differ
only in which generality knobs are unlocked.  Meijer G fixes all scales
and exponents to 1, Fox H frees the scales, H-bar additionally allows
fractional exponents on the first n upper and last q - m lower parameter
triplets, and the extended H-hat allows exponents everywhere.  Evaluation
maps the (m, n, p, q) parameter block onto engine terms and integrates;
the kind tag is validation only, every kind runs the same code path.
"""

import enum
from dataclasses import dataclass, replace

from .errors import DomainError
from .mellin import ContourSpec, EvalResult, GammaTermSpec, Slot, integrate


class HKind(enum.Enum):
    MEIJER_G = "meijer_g"
    FOX_H = "fox_h"
    FOX_HBAR = "fox_hbar"
    EXT_HHAT = "ext_hhat"


def _is_one(v: float) -> bool:
    return abs(v - 1.0) <= 1e-12


@dataclass(frozen=True)
class HFamilySpec:
    """Parameter block for one function of the family.

    ``upper`` holds p triplets (alpha_j, A_j, a_j) and ``lower`` q triplets
    (beta_j, B_j, b_j); the first n upper and first m lower entries are the
    numerator groups.  The argument must be a positive real.
    """

    kind: HKind
    m: int
    n: int
    upper: tuple[tuple[float, float, float], ...]
    lower: tuple[tuple[float, float, float], ...]
    argument: float

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(tuple(map(float, t)) for t in self.upper))
        object.__setattr__(self, "lower", tuple(tuple(map(float, t)) for t in self.lower))
        p, q = self.p, self.q
        if not (1 <= self.m <= q):
            raise DomainError(f"order m={self.m} violates 1 <= m <= q={q}")
        if not (0 <= self.n <= p):
            raise DomainError(f"order n={self.n} violates 0 <= n <= p={p}")
        for name, triplets in (("upper", self.upper), ("lower", self.lower)):
            for j, (_, scale, expo) in enumerate(triplets):
                if not scale > 0:
                    raise DomainError(f"{name}[{j}] scale must be positive, got {scale}")
                if not expo > 0:
                    raise DomainError(f"{name}[{j}] exponent must be positive, got {expo}")
        if not self.argument > 0:
            raise DomainError(f"argument must be a positive real, got {self.argument}")
        self._check_kind_constraints()

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    def _check_kind_constraints(self):
        kind = self.kind
        if kind is HKind.EXT_HHAT:
            return
        upper_exp = [a for _, _, a in self.upper]
        lower_exp = [b for _, _, b in self.lower]
        if kind is HKind.FOX_HBAR:
            bad_u = [j for j in range(self.n, self.p) if not _is_one(upper_exp[j])]
            bad_l = [j for j in range(0, self.m) if not _is_one(lower_exp[j])]
            if bad_u or bad_l:
                raise DomainError(
                    "FOX_HBAR allows exponents only on the first n upper and the "
                    f"last q-m lower entries; offending upper={bad_u} lower={bad_l}"
                )
            return
        if not all(_is_one(a) for a in upper_exp + lower_exp):
            raise DomainError(f"{kind.name} requires all exponents equal to 1")
        if kind is HKind.MEIJER_G:
            scales = [A for _, A, _ in self.upper] + [B for _, B, _ in self.lower]
            if not all(_is_one(A) for A in scales):
                raise DomainError("MEIJER_G requires all scales equal to 1")

    def to_terms(self) -> list[GammaTermSpec]:
        """Positional slot mapping onto engine terms."""
        terms = []
        for j, (alpha, scale, expo) in enumerate(self.upper):
            slot = Slot.NUM_UPPER if j < self.n else Slot.DEN_UPPER
            terms.append(GammaTermSpec(alpha, scale, expo, slot))
        for j, (beta, scale, expo) in enumerate(self.lower):
            slot = Slot.NUM_LOWER if j < self.m else Slot.DEN_LOWER
            terms.append(GammaTermSpec(beta, scale, expo, slot))
        return terms


def eval_h(spec: HFamilySpec, contour_override: ContourSpec | None = None) -> EvalResult:
    """Evaluate any member of the family at its real positive argument."""
    return integrate(spec.to_terms(), spec.argument, contour_override)


def reduce_kind(spec: HFamilySpec) -> HFamilySpec:
    """Relabel with the most constrained kind the parameters satisfy."""
    for kind in (HKind.MEIJER_G, HKind.FOX_H, HKind.FOX_HBAR):
        try:
            return replace(spec, kind=kind)
        except DomainError:
            continue
    return replace(spec, kind=HKind.EXT_HHAT)
