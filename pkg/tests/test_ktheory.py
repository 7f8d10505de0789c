import json
import random
from fractions import Fraction

import pytest

from supergrr import (
    ChowModel,
    GradedElement,
    KClass,
    ModelMismatch,
    NormalData,
    SuperScalar,
    ch_twisted,
    j_map,
    pullback_from_point,
    sigma1_normal,
    star_identity,
    star_product,
)

C0 = ChowModel.curve(0)
C2 = ChowModel.curve(2)
P2 = ChowModel.proj_space(2)


def elt(model, *coeffs):
    return GradedElement.from_coeffs(model, coeffs)


def random_class(rng, model):
    return KClass(
        GradedElement.from_coeffs(
            model,
            [
                SuperScalar(
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                    Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                )
                for _ in range(model.top_degree + 1)
            ],
        )
    )


def random_normal(rng, model):
    return NormalData.from_degrees(
        model, [rng.randint(-5, 5) for _ in range(rng.randint(0, 2))]
    )


# -- sigma_1 of the conormal data ------------------------------------------------


@pytest.mark.parametrize("g", range(4))
def test_sigma1_of_susy_conormal(g):
    model = ChowModel.curve(g)
    nd = NormalData.from_degrees(model, [g - 1])
    assert sigma1_normal(nd) == elt(model, 2, g - 1)


def test_sigma1_bosonic_is_one():
    assert sigma1_normal(NormalData.bosonic(C2)) == GradedElement.one(C2)


def test_sigma1_two_zero_roots():
    nd = NormalData.from_degrees(C2, [0, 0])
    assert sigma1_normal(nd) == GradedElement.scalar(C2, 4)


def test_sigma1_leading_term_is_two_to_s():
    rng = random.Random(3)
    for _ in range(50):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        lead = sigma1_normal(nd).coefficient(0)
        assert lead == SuperScalar(2 ** len(nd.normal_roots))


# -- the map j -------------------------------------------------------------------


def test_j_of_unit_is_sigma1():
    nd = NormalData.from_degrees(C2, [1])
    assert j_map(KClass.unit(C2), nd).ch_image == sigma1_normal(nd)


def test_j_is_identity_on_bosonic():
    nd = NormalData.bosonic(C2)
    x = KClass(elt(C2, SuperScalar(1, 2), SuperScalar(3, -1)))
    assert j_map(x, nd) == x


def test_j_worked_example():
    nd = NormalData.from_degrees(C0, [-1])
    x = KClass(elt(C0, 1, 1))
    assert j_map(x, nd).ch_image == elt(C0, 2, 1)


def test_j_model_mismatch():
    with pytest.raises(ModelMismatch):
        j_map(KClass.unit(C0), NormalData.bosonic(C2))


# -- star product ------------------------------------------------------------------


def test_star_identity_element():
    rng = random.Random(5)
    for _ in range(100):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x = random_class(rng, model)
        assert star_product(x, star_identity(nd), nd) == x


def test_star_is_plain_product_on_bosonic():
    rng = random.Random(7)
    nd = NormalData.bosonic(C2)
    for _ in range(50):
        x, y = random_class(rng, C2), random_class(rng, C2)
        assert star_product(x, y, nd) == x * y


def test_j_is_ring_morphism_to_star():
    rng = random.Random(11)
    for _ in range(200):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x, y = random_class(rng, model), random_class(rng, model)
        assert star_product(j_map(x, nd), j_map(y, nd), nd) == j_map(x * y, nd)


def test_star_associative_commutative():
    rng = random.Random(13)
    for _ in range(150):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x, y, z = (random_class(rng, model) for _ in range(3))
        assert star_product(x, y, nd) == star_product(y, x, nd)
        lhs = star_product(star_product(x, y, nd), z, nd)
        rhs = star_product(x, star_product(y, z, nd), nd)
        assert lhs == rhs


# -- twisted character ----------------------------------------------------------------


def test_twisted_character_splits_j():
    rng = random.Random(17)
    for _ in range(200):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x = random_class(rng, model)
        assert ch_twisted(j_map(x, nd), nd) == x.ch_image


def test_twisted_character_on_bosonic_is_plain():
    nd = NormalData.bosonic(C2)
    x = KClass(elt(C2, SuperScalar(2, 1), SuperScalar(0, -3)))
    assert ch_twisted(x, nd) == x.ch_image


def test_twisted_character_multiplicative_for_star():
    rng = random.Random(19)
    for _ in range(200):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x, y = random_class(rng, model), random_class(rng, model)
        lhs = ch_twisted(star_product(x, y, nd), nd)
        rhs = ch_twisted(x, nd).ring_mul(ch_twisted(y, nd))
        assert lhs == rhs


# -- pushforward identity along the canonical embedding ----------------------------------


def test_embedding_pushforward_two_routes():
    """ch_S of an embedded class equals ch(x) . td(-N) computed via Todd."""
    rng = random.Random(23)
    for _ in range(200):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        x = random_class(rng, model)
        via_sigma = x.ch_image.ring_mul(sigma1_normal(nd).series_invert())
        todd_of_normal = nd.normal_bundle().todd()
        via_todd = x.ch_image.ring_mul(todd_of_normal.series_invert())
        assert via_sigma == via_todd
        # the normal-bundle Todd class is itself the sigma_1 class
        assert todd_of_normal == sigma1_normal(nd)


def test_structure_pullback_functoriality():
    rng = random.Random(29)
    for _ in range(100):
        model = rng.choice([C0, C2, P2])
        nd = random_normal(rng, model)
        value = SuperScalar(
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
            Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
        )
        pulled = pullback_from_point(value, nd)
        assert ch_twisted(pulled, nd) == GradedElement.scalar(model, value)


# -- serialization ----------------------------------------------------------------------


def test_kclass_json_round_trip():
    x = KClass(elt(C2, SuperScalar(1, -1), SuperScalar(Fraction(2, 3), 0)))
    blob = json.dumps(x.to_json())
    assert KClass.from_json(json.loads(blob)) == x


def test_normal_data_json_round_trip():
    nd = NormalData.from_degrees(C2, [1, -4])
    blob = json.dumps(nd.to_json())
    assert NormalData.from_json(json.loads(blob)) == nd
