"""K-classes on a superscheme through their Chern-character images.

On the bosonic reductions in scope the Chern character is injective, so
a K-class is stored faithfully as a graded element.  The embedding of
the bosonic reduction X into the ambient superscheme contributes the
purely odd conormal data N*; its class

    sigma_1(N*) = prod_j (1 + e**nu_j)

has invertible leading coefficient 2**s and twists everything: the map
j multiplies by sigma_1(N*), the star product divides one copy back
out, and the twisted character ch_S divides by sigma_1(N*).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chowring import ChowModel, GradedElement, ModelMismatch
from .superbundle import SuperBundle
from .superscalar import SuperScalar


@dataclass(frozen=True, slots=True)
class NormalData:
    """Bosonic roots of the parity-shifted conormal sheaf of X in the ambient superscheme."""

    model: ChowModel
    normal_roots: tuple[GradedElement, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "normal_roots", tuple(self.normal_roots))
        # reuse the root validation of the purely odd conormal bundle
        self.conormal_bundle()

    @classmethod
    def bosonic(cls, model: ChowModel) -> "NormalData":
        """Ambient space equal to its bosonic reduction: no odd directions."""
        return cls(model, ())

    @classmethod
    def from_degrees(cls, model: ChowModel, degrees) -> "NormalData":
        bundle = SuperBundle.from_degrees(model, (), degrees)
        return cls(model, bundle.odd_roots)

    def conormal_bundle(self) -> SuperBundle:
        """N* as a purely odd bundle (rank 0|s)."""
        return SuperBundle(self.model, (), self.normal_roots)

    def normal_bundle(self) -> SuperBundle:
        return self.conormal_bundle().dual()

    def to_json(self) -> dict:
        return {
            "model": self.model.to_json(),
            "normal_roots": [str(c.coefficient(1).body) for c in self.normal_roots],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NormalData":
        model = ChowModel.from_json(obj["model"])
        return cls.from_degrees(model, obj.get("normal_roots", []))


@dataclass(frozen=True, slots=True)
class KClass:
    """K-theory class identified with its Chern-character image."""

    ch_image: GradedElement

    @property
    def model(self) -> ChowModel:
        return self.ch_image.model

    @classmethod
    def unit(cls, model: ChowModel) -> "KClass":
        return cls(GradedElement.one(model))

    @classmethod
    def from_bundle(cls, bundle: SuperBundle) -> "KClass":
        return cls(bundle.chern_character())

    def __mul__(self, other: "KClass") -> "KClass":
        """Untwisted product, i.e. the product of character images."""
        return KClass(self.ch_image.ring_mul(other.ch_image))

    def to_json(self) -> dict:
        return {"ch_image": self.ch_image.to_json()}

    @classmethod
    def from_json(cls, obj: dict) -> "KClass":
        return cls(GradedElement.from_json(obj["ch_image"]))


def _check_model(x_model: ChowModel, nd: NormalData) -> None:
    if x_model != nd.model:
        raise ModelMismatch(f"{x_model} vs {nd.model}")


def sigma1_normal(nd: NormalData) -> GradedElement:
    """sigma_1(N*) = prod (1 + e**nu_j); equals 1 on a bosonic ambient space."""
    return nd.conormal_bundle().sigma1()


def j_map(x: KClass, nd: NormalData) -> KClass:
    """Multiplication by sigma_1(N*): the class of the twisted graded module."""
    _check_model(x.model, nd)
    return KClass(x.ch_image.ring_mul(sigma1_normal(nd)))


def star_product(x: KClass, y: KClass, nd: NormalData) -> KClass:
    """x * y = x . y . sigma_1(N*)**-1, with identity sigma_1(N*)."""
    _check_model(x.model, nd)
    _check_model(y.model, nd)
    product = x.ch_image.ring_mul(y.ch_image)
    return KClass(product.ring_mul(sigma1_normal(nd).series_invert()))


def star_identity(nd: NormalData) -> KClass:
    return KClass(sigma1_normal(nd))


def ch_twisted(x: KClass, nd: NormalData) -> GradedElement:
    """Twisted character ch_S(x) = ch(x . sigma_1(N*)**-1)."""
    _check_model(x.model, nd)
    return x.ch_image.ring_mul(sigma1_normal(nd).series_invert())


def pullback_from_point(value: SuperScalar, nd: NormalData) -> KClass:
    """Pullback of a point class along the structure morphism.

    A class on the point is a scalar; its pullback is the corresponding
    constant class in the twisted ring, so its twisted character is the
    constant again.
    """
    constant = KClass(GradedElement.scalar(nd.model, value))
    return j_map(constant, nd)
