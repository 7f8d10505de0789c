import random
from fractions import Fraction
from types import SimpleNamespace

import pytest

from supergrr import (
    ChowModel,
    GradedElement,
    InvalidRank,
    ModelMismatch,
    NonIntegralTwist,
    SplitSupercurve,
    SuperBundle,
    SuperScalar,
    check_sgrr,
    chi_character_form,
    chi_super,
    gr_module,
    pullback_tangent,
    root_degree,
    rr_oracle,
)
from supergrr.suites import random_supercurve_instance


def degrees(roots):
    return sorted(root_degree(r) for r in roots)


def bundle_on(curve, even=(), odd=()):
    return SuperBundle.from_degrees(curve.model, even, odd)


# -- split supercurves -----------------------------------------------------------


def test_susy_twist_degree():
    assert SplitSupercurve.susy(2).deg_l == 1
    assert SplitSupercurve.susy(0, 4).deg_l == 1
    assert SplitSupercurve.susy(3, 2).deg_l == 3


def test_susy_rejects_odd_rr():
    with pytest.raises(NonIntegralTwist):
        SplitSupercurve.susy(1, 3)


def test_negative_genus_rejected():
    with pytest.raises(ValueError):
        SplitSupercurve(-1, Fraction(0))


# -- gr of standard sheaves -------------------------------------------------------


def test_gr_structure_sheaf():
    # O on the supercurve restricts to O_X + (parity shift of) L
    for g in range(4):
        curve = SplitSupercurve.susy(g)
        graded = gr_module(curve, bundle_on(curve, even=(0,)))
        assert degrees(graded.even_roots) == [0]
        assert degrees(graded.odd_roots) == [g - 1]


def test_gr_odd_structure_sheaf_swaps_parities():
    curve = SplitSupercurve.susy(2)
    graded = gr_module(curve, bundle_on(curve, odd=(0,)))
    assert degrees(graded.even_roots) == [1]
    assert degrees(graded.odd_roots) == [0]


def test_gr_twist_rule():
    curve = SplitSupercurve(0, Fraction(1))
    graded = gr_module(curve, bundle_on(curve, even=(2,), odd=(3,)))
    assert degrees(graded.even_roots) == [2, 4]
    assert degrees(graded.odd_roots) == [3, 3]


def test_gr_rejects_fractional_twist():
    curve = SplitSupercurve(1, Fraction(1, 2))
    with pytest.raises(NonIntegralTwist):
        gr_module(curve, bundle_on(curve, even=(0,)))


def test_gr_model_mismatch():
    curve = SplitSupercurve.susy(2)
    other = SuperBundle.from_degrees(ChowModel.curve(1), (0,), ())
    with pytest.raises(ModelMismatch):
        gr_module(curve, other)


# -- Euler characteristics ---------------------------------------------------------


@pytest.mark.parametrize("g", range(4))
def test_chi_of_structure_sheaf(g):
    # cohomology oracle: chi(O_X) = 1 - g and chi(L) = deg L + 1 - g = 0
    curve = SplitSupercurve.susy(g)
    assert chi_super(curve, bundle_on(curve, even=(0,))).value == SuperScalar(1 - g)


@pytest.mark.parametrize("g", range(4))
def test_chi_of_odd_structure_sheaf(g):
    curve = SplitSupercurve.susy(g)
    value = chi_super(curve, bundle_on(curve, odd=(0,))).value
    assert value == SuperScalar(0, -(1 - g))


def test_chi_of_zero_bundle():
    curve = SplitSupercurve.susy(1)
    assert rr_oracle(curve, SuperBundle.zero(curve.model)).value == SuperScalar(0)
    assert chi_super(curve, SuperBundle.zero(curve.model)).value == SuperScalar(0)


@pytest.mark.parametrize("g", range(4))
@pytest.mark.parametrize("d", range(-5, 6))
def test_oracle_on_even_line(g, d):
    # gr of an even line of degree d adds an odd line of degree d + g - 1,
    # so chi = (d + 1 - g) - P d
    curve = SplitSupercurve.susy(g)
    value = rr_oracle(curve, bundle_on(curve, even=(d,))).value
    assert value == SuperScalar(d + 1 - g, -d)


def test_purely_bosonic_reduction_is_classical():
    # with no odd part and deg L = 0 both components obey plain
    # Riemann-Roch: chi = d + 1 - g on each side of the parity split
    for g in range(4):
        curve = SplitSupercurve(g, Fraction(0))
        for d in range(-5, 6):
            value = chi_super(curve, bundle_on(curve, even=(d,))).value
            assert value == SuperScalar(d + 1 - g, -(d + 1 - g))


def test_even_component_is_twist_independent_for_even_lines():
    # the bosonic part of chi(O(d)) is the classical d + 1 - g no matter
    # how the odd direction is twisted
    for g in range(3):
        for deg_l in range(-3, 4):
            curve = SplitSupercurve(g, Fraction(deg_l))
            for d in range(-4, 5):
                bundle = bundle_on(curve, even=(d,))
                assert chi_super(curve, bundle).value.body == d + 1 - g
                assert check_sgrr(curve, bundle)


def test_integrality_of_super_euler():
    curve = SplitSupercurve.susy(2)
    chi = chi_super(curve, bundle_on(curve, even=(3, -1), odd=(2,)))
    assert chi.is_integral


def test_chi_additive_over_direct_sum():
    rng = random.Random(51)
    for _ in range(200):
        curve, first = random_supercurve_instance(rng)
        second = SuperBundle.from_degrees(
            curve.model,
            [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))],
            [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))],
        )
        total = chi_super(curve, first.direct_sum(second)).value
        assert total == chi_super(curve, first).value + chi_super(curve, second).value


# -- the central identity -----------------------------------------------------------


def test_check_sgrr_on_structure_sheaf():
    for g in range(4):
        curve = SplitSupercurve.susy(g)
        assert check_sgrr(curve, bundle_on(curve, even=(0,)))


def test_check_sgrr_randomized():
    rng = random.Random(42)
    for _ in range(500):
        curve, bundle = random_supercurve_instance(rng)
        assert check_sgrr(curve, bundle), (curve, bundle)


def test_character_form_equals_integral_form():
    rng = random.Random(43)
    for _ in range(500):
        curve, bundle = random_supercurve_instance(rng)
        assert chi_character_form(curve, bundle) == chi_super(curve, bundle)


def test_twisted_integrand_reduces_to_plain_one():
    """The sigma_1 twists cancel in the pushforward integrand.

    ch_S(x) . td(T_X) . sigma_1(N*) equals ch(x) . td(T_X), which is why
    the engine may integrate the untwisted form.
    """
    from supergrr import KClass, ch_twisted, sigma1_normal

    rng = random.Random(47)
    for _ in range(200):
        curve, bundle = random_supercurve_instance(rng)
        nd = curve.normal_data()
        x = KClass(gr_module(curve, bundle).chern_character())
        twisted = ch_twisted(x, nd).ring_mul(curve.todd_class()).ring_mul(sigma1_normal(nd))
        plain = x.ch_image.ring_mul(curve.todd_class())
        assert twisted == plain


def test_normal_data_of_split_supercurve():
    from supergrr import NormalData, sigma1_normal

    curve = SplitSupercurve.susy(3)  # deg L = 2
    nd = curve.normal_data()
    assert nd == NormalData.from_degrees(curve.model, [2])
    expected = GradedElement.from_coeffs(curve.model, [2, 2])
    assert sigma1_normal(nd) == expected


# -- restricted target tangent ---------------------------------------------------------


def chi_restricted_tangent_oracle(g, n_rr, r, s, tau, mu):
    """Componentwise Riemann-Roch on gr of the restricted tangent sheaf.

    With twist degree m = g - 1 + n_rr/2, the even part of gr carries
    rank r + s and degree tau + mu + s m, the odd part rank r + s and
    degree tau + mu + r m; chi = deg + rank (1 - g) on each:

        chi = (1-g)(r - P s) + (n_rr/2)(s - P r) + (1 - P)(tau + mu)
    """
    half_rr = Fraction(n_rr, 2)
    return SuperScalar(
        (1 - g) * r + half_rr * s + tau + mu,
        -((1 - g) * s + half_rr * r + tau + mu),
    )


def test_pullback_tangent_shape():
    curve = SplitSupercurve.susy(0)
    target = SimpleNamespace(r=3, s=2, tau=Fraction(8), phi_int=Fraction(-2))
    bundle = pullback_tangent(curve, target)
    assert bundle.rank == (3, 2)
    assert sum(root_degree(x) for x in bundle.even_roots) == 8
    assert sum(root_degree(x) for x in bundle.odd_roots) == 2


def test_pullback_tangent_worked_example():
    curve = SplitSupercurve.susy(0, 0)
    target = SimpleNamespace(r=1, s=1, tau=Fraction(2), phi_int=Fraction(-1))
    chi = chi_super(curve, pullback_tangent(curve, target)).value
    assert chi == SuperScalar(4, -4)


def test_pullback_tangent_degreeless_target():
    for g in range(3):
        for n_rr in (0, 2, 4):
            for r in range(1, 4):
                for s in range(3):
                    curve = SplitSupercurve.susy(g, n_rr)
                    target = SimpleNamespace(r=r, s=s, tau=Fraction(0), phi_int=Fraction(0))
                    chi = chi_super(curve, pullback_tangent(curve, target)).value
                    assert chi == chi_restricted_tangent_oracle(g, n_rr, r, s, 0, 0)


def test_pullback_tangent_full_grid_against_oracle():
    for g in range(4):
        for n_rr in (0, 2, 4, 6):
            curve = SplitSupercurve.susy(g, n_rr)
            for r in range(1, 5):
                for s in range(4):
                    for tau in range(-6, 7):
                        for mu in range(-6, 7):
                            if s == 0 and mu:
                                continue
                            target = SimpleNamespace(
                                r=r, s=s, tau=Fraction(tau), phi_int=Fraction(-mu)
                            )
                            chi = chi_super(curve, pullback_tangent(curve, target)).value
                            expected = chi_restricted_tangent_oracle(g, n_rr, r, s, tau, mu)
                            assert chi == expected, (g, n_rr, r, s, tau, mu)


def test_pullback_tangent_invalid_ranks():
    curve = SplitSupercurve.susy(1)
    with pytest.raises(InvalidRank):
        pullback_tangent(curve, SimpleNamespace(r=0, s=0, tau=Fraction(0), phi_int=Fraction(0)))
    with pytest.raises(InvalidRank):
        pullback_tangent(curve, SimpleNamespace(r=2, s=-1, tau=Fraction(0), phi_int=Fraction(0)))
    with pytest.raises(InvalidRank):
        pullback_tangent(curve, SimpleNamespace(r=2, s=0, tau=Fraction(0), phi_int=Fraction(3)))
