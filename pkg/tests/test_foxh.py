"""H-family front end: validation, slot mapping, reduction chain."""

import math

import numpy as np
import pytest

from conftest import TWO_EXP_PDF_Y1, exp_neg_series, two_exp_pdf
from gammasum import DomainError, HFamilySpec, HKind, eval_h, reduce_kind


def meijer_g(m, n, upper, lower, z):
    return HFamilySpec(
        kind=HKind.MEIJER_G,
        m=m,
        n=n,
        upper=tuple((a, 1.0, 1.0) for a in upper),
        lower=tuple((b, 1.0, 1.0) for b in lower),
        argument=z,
    )


def test_cahen_mellin_g_function():
    spec = meijer_g(1, 0, (), (0.0,), 1.0)
    assert eval_h(spec).value == pytest.approx(exp_neg_series(1.0), abs=1e-10)
    spec5 = meijer_g(1, 0, (), (0.0,), 5.0)
    assert eval_h(spec5).value == pytest.approx(exp_neg_series(5.0), abs=1e-10)


def test_two_exponential_sum_g_function():
    o1, o2, y = 1.0, 2.0, 1.0
    spec = meijer_g(2, 0, (1 + 1 / o1, 1 + 1 / o2), (1 / o1, 1 / o2), math.exp(-y))
    val = eval_h(spec).value / (o1 * o2)
    assert val == pytest.approx(TWO_EXP_PDF_Y1, abs=1e-11)
    assert val == pytest.approx(two_exp_pdf(o1, o2, y), abs=1e-11)


def _random_reducible_spec(rng, z=None):
    """Random parameter block valid as every kind at once (scales, exps = 1).

    Offsets are drawn so the pole families stay separated: the numerator
    upper entry leaves abscissas below 1 - alpha in the mirror coordinate
    and the numerator lower entry demands more than -beta.
    """
    m, n = 1, 1
    upper = ((rng.uniform(0.2, 0.45), 1.0, 1.0),)
    lower = ((rng.uniform(-0.5, -0.1), 1.0, 1.0), (rng.uniform(0.8, 1.8), 1.0, 1.0))
    return HFamilySpec(
        kind=HKind.EXT_HHAT,
        m=m,
        n=n,
        upper=upper,
        lower=lower,
        argument=z if z is not None else rng.uniform(0.3, 3.0),
    )


def test_four_way_reduction_chain_agreement():
    rng = np.random.default_rng(17)
    for _ in range(20):
        spec = _random_reducible_spec(rng)
        vals = []
        for kind in (HKind.EXT_HHAT, HKind.FOX_HBAR, HKind.FOX_H, HKind.MEIJER_G):
            vals.append(eval_h(HFamilySpec(
                kind=kind, m=spec.m, n=spec.n,
                upper=spec.upper, lower=spec.lower, argument=spec.argument,
            )).value)
        for v in vals[1:]:
            assert abs(v - vals[0]) <= 1e-10 * max(1.0, abs(vals[0]))


def test_reduce_kind_chain():
    rng = np.random.default_rng(23)
    spec = _random_reducible_spec(rng)
    assert reduce_kind(spec).kind is HKind.MEIJER_G

    scaled = HFamilySpec(
        kind=HKind.EXT_HHAT, m=1, n=1,
        upper=((0.5, 2.0, 1.0),), lower=((0.0, 1.0, 1.0), (1.5, 1.0, 1.0)),
        argument=1.0,
    )
    assert reduce_kind(scaled).kind is HKind.FOX_H

    # fractional exponent in a denominator-upper slot is only H-hat legal
    hhat_only = HFamilySpec(
        kind=HKind.EXT_HHAT, m=1, n=0,
        upper=((1.5, 1.0, 0.6),), lower=((0.0, 1.0, 1.0),),
        argument=1.0,
    )
    assert reduce_kind(hhat_only).kind is HKind.EXT_HHAT

    # fractional exponent on a numerator-upper slot is H-bar legal
    hbar = HFamilySpec(
        kind=HKind.EXT_HHAT, m=1, n=1,
        upper=((0.5, 1.0, 0.6),), lower=((0.0, 1.0, 1.0), (1.5, 1.0, 1.0)),
        argument=1.0,
    )
    assert reduce_kind(hbar).kind is HKind.FOX_HBAR


def test_order_validation():
    with pytest.raises(DomainError):
        meijer_g(0, 0, (), (0.0,), 1.0)  # m must be >= 1
    with pytest.raises(DomainError):
        meijer_g(2, 0, (), (0.0,), 1.0)  # m > q
    with pytest.raises(DomainError):
        meijer_g(1, 1, (), (0.0,), 1.0)  # n > p
    with pytest.raises(DomainError):
        meijer_g(1, 0, (), (0.0,), -1.0)  # argument must be positive


def test_kind_constraint_validation():
    with pytest.raises(DomainError):
        HFamilySpec(kind=HKind.MEIJER_G, m=1, n=0,
                    upper=(), lower=((0.0, 2.0, 1.0),), argument=1.0)
    with pytest.raises(DomainError):
        HFamilySpec(kind=HKind.FOX_H, m=1, n=0,
                    upper=(), lower=((0.0, 1.0, 0.5),), argument=1.0)
    with pytest.raises(DomainError):
        # H-bar forbids exponents on the first m lower entries
        HFamilySpec(kind=HKind.FOX_HBAR, m=1, n=0,
                    upper=(), lower=((0.0, 1.0, 0.5),), argument=1.0)
    # but allows them past m
    HFamilySpec(kind=HKind.FOX_HBAR, m=1, n=0,
                upper=(), lower=((0.0, 1.0, 1.0), (1.5, 1.0, 0.5)), argument=1.0)


def test_nonpositive_scale_or_exponent_rejected():
    with pytest.raises(DomainError):
        HFamilySpec(kind=HKind.EXT_HHAT, m=1, n=0,
                    upper=(), lower=((0.0, -1.0, 1.0),), argument=1.0)
    with pytest.raises(DomainError):
        HFamilySpec(kind=HKind.EXT_HHAT, m=1, n=0,
                    upper=(), lower=((0.0, 1.0, 0.0),), argument=1.0)


def test_slot_group_permutation_invariance():
    # permuting entries inside one slot group only reorders a product
    base = HFamilySpec(
        kind=HKind.EXT_HHAT, m=0 + 2, n=0,
        upper=((1.7, 1.0, 1.2), (2.3, 1.0, 0.8)),
        lower=((0.7, 1.0, 1.2), (1.3, 1.0, 0.8)),
        argument=0.6,
    )
    swapped = HFamilySpec(
        kind=HKind.EXT_HHAT, m=2, n=0,
        upper=(base.upper[1], base.upper[0]),
        lower=(base.lower[1], base.lower[0]),
        argument=0.6,
    )
    a = eval_h(base).value
    b = eval_h(swapped).value
    assert abs(a - b) <= 1e-12 * max(1.0, abs(a))


def test_density_type_g_functions_are_nonnegative(fig_params):
    # m = q, n = 0 blocks built from sum-density parameters at argument
    # e**-y represent densities and must not go negative
    from gammasum.sums import _integer_terms  # noqa: F401  (documenting provenance)

    for y in np.linspace(0.2, 8.0, 12):
        o1, o2 = 1.0, 3.0
        spec = meijer_g(2, 0, (1 + 1 / o1, 1 + 1 / o2), (1 / o1, 1 / o2), math.exp(-y))
        assert eval_h(spec).value >= -1e-10
