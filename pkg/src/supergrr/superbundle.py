"""Super vector bundles presented by formal Chern roots.

A bundle of rank r|s is stored as r even roots (Chern roots of the even
part E0) and s bosonic roots of the parity shift of the odd part, so
every stored root is a plain degree-1 class with no P component.  By the
splitting principle this loses no generality for characteristic-class
identities, and it makes every class below a finite exact computation:

* Chern character:   ch(E) = sum_i e**a_i  -  P * sum_j e**m_j
* total Chern class: c(E)  = P**s * prod_i (1 + a_i) / prod_j (1 + m_j)
* Todd character:    even lines contribute x / (1 - e**-x), computed by
  inverting the series sum_{i>=1} (-x)**(i-1) / i!; odd lines contribute
  1 + e**-m
* sigma_1 (purely odd bundles): prod_j (1 + e**m_j)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .chowring import ChowModel, GradedElement, ModelMismatch
from .superscalar import ONE, PI, SuperScalar, pi_power

Roots = tuple[GradedElement, ...]


class NotPurelyOdd(ValueError):
    """sigma_1 is only defined here for bundles of rank 0|s."""


def _validate_root(model: ChowModel, root: GradedElement) -> None:
    if root.model != model:
        raise ModelMismatch(f"root lives on {root.model}, bundle on {model}")
    if root.coeffs[0]:
        raise ValueError("roots must be homogeneous of degree 1")
    for c in root.coeffs[2:]:
        if c:
            raise ValueError("roots must be homogeneous of degree 1")
    if model.top_degree >= 1 and root.coeffs[1].soul:
        raise ValueError("roots must have soul-free coefficients")


def root_degree(root: GradedElement) -> Fraction:
    """Degree-1 coefficient of a root (0 on a point model)."""
    if root.model.top_degree < 1:
        return Fraction(0)
    return root.coeffs[1].body


@dataclass(frozen=True, slots=True)
class SuperBundle:
    """Split super vector bundle of rank r|s given by its Chern roots."""

    model: ChowModel
    even_roots: Roots
    odd_roots: Roots

    def __post_init__(self) -> None:
        object.__setattr__(self, "even_roots", tuple(self.even_roots))
        object.__setattr__(self, "odd_roots", tuple(self.odd_roots))
        for root in self.even_roots + self.odd_roots:
            _validate_root(self.model, root)

    # -- constructors --------------------------------------------------

    @classmethod
    def from_degrees(
        cls,
        model: ChowModel,
        even_degs: Iterable[Fraction | int] = (),
        odd_degs: Iterable[Fraction | int] = (),
    ) -> "SuperBundle":
        """Roots d*w (or d*h) from plain degrees; a point admits only 0."""

        def mk(deg) -> GradedElement:
            if model.top_degree < 1:
                if deg:
                    raise ValueError("nonzero root degree on a point model")
                return GradedElement.zero(model)
            if not isinstance(deg, Fraction):
                deg = Fraction(deg)
            return GradedElement.monomial(model, 1, deg)

        return cls(model, tuple(mk(d) for d in even_degs), tuple(mk(d) for d in odd_degs))

    @classmethod
    def zero(cls, model: ChowModel) -> "SuperBundle":
        return cls(model, (), ())

    @property
    def rank(self) -> tuple[int, int]:
        return (len(self.even_roots), len(self.odd_roots))

    # -- characteristic classes -----------------------------------------

    def chern_character(self) -> GradedElement:
        """ch(E) = sum e**a_i - P * sum e**m_j."""
        total = GradedElement.zero(self.model)
        for root in self.even_roots:
            total = total + root.exp_nilpotent()
        odd = GradedElement.zero(self.model)
        for root in self.odd_roots:
            odd = odd + root.exp_nilpotent()
        return total - odd.scale(PI)

    def chern_total(self) -> GradedElement:
        """Total Chern class P**s * prod(1 + a_i) * prod(1 + m_j)**-1."""
        one = GradedElement.one(self.model)
        numerator = one
        for root in self.even_roots:
            numerator = numerator.ring_mul(one + root)
        denominator = one
        for root in self.odd_roots:
            denominator = denominator.ring_mul(one + root)
        total = numerator.ring_mul(denominator.series_invert())
        return total.scale(pi_power(len(self.odd_roots)))

    def chern_class(self, degree: int) -> SuperScalar:
        """Coefficient of c_degree(E) on the degree generator."""
        return self.chern_total().coefficient(degree)

    def c1(self) -> SuperScalar:
        return self.chern_class(1)

    def todd(self) -> GradedElement:
        """Multiplicative Todd character over the root decomposition."""
        one = GradedElement.one(self.model)
        result = one
        for root in self.even_roots:
            result = result.ring_mul(_todd_even_line(root))
        for root in self.odd_roots:
            result = result.ring_mul(one + (-root).exp_nilpotent())
        return result

    def sigma1(self) -> GradedElement:
        """prod_j (1 + e**m_j); the class of O + P*Sym^1 on each odd line."""
        if self.even_roots:
            raise NotPurelyOdd(f"rank {self.rank} bundle has an even part")
        result = GradedElement.one(self.model)
        one = GradedElement.one(self.model)
        for root in self.odd_roots:
            result = result.ring_mul(one + root.exp_nilpotent())
        return result

    # -- bundle operations ------------------------------------------------

    def dual(self) -> "SuperBundle":
        return SuperBundle(
            self.model,
            tuple(-r for r in self.even_roots),
            tuple(-r for r in self.odd_roots),
        )

    def pi_shift(self) -> "SuperBundle":
        """Parity shift: swaps the even and odd root lists."""
        return SuperBundle(self.model, self.odd_roots, self.even_roots)

    def direct_sum(self, other: "SuperBundle") -> "SuperBundle":
        if self.model != other.model:
            raise ModelMismatch(f"{self.model} vs {other.model}")
        return SuperBundle(
            self.model,
            self.even_roots + other.even_roots,
            self.odd_roots + other.odd_roots,
        )

    __add__ = direct_sum

    def tensor(self, other: "SuperBundle") -> "SuperBundle":
        """Pairwise root sums; matching parities are even, mixed are odd."""
        if self.model != other.model:
            raise ModelMismatch(f"{self.model} vs {other.model}")
        even = [a + b for a in self.even_roots for b in other.even_roots]
        even += [m + n for m in self.odd_roots for n in other.odd_roots]
        odd = [a + n for a in self.even_roots for n in other.odd_roots]
        odd += [m + b for m in self.odd_roots for b in other.even_roots]
        return SuperBundle(self.model, tuple(even), tuple(odd))

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "model": self.model.to_json(),
            "even_roots": [str(root_degree(r)) for r in self.even_roots],
            "odd_roots": [str(root_degree(r)) for r in self.odd_roots],
        }

    @classmethod
    def from_json(cls, obj: dict, default_model: ChowModel | None = None) -> "SuperBundle":
        """Accepts the full root form or the curve shorthand with degree lists."""
        if "model" in obj:
            model = ChowModel.from_json(obj["model"])
        elif default_model is not None:
            model = default_model
        else:
            raise ValueError("bundle spec carries no model")
        if "even_degs" in obj or "odd_degs" in obj:
            even = [_parse_deg(d) for d in obj.get("even_degs", [])]
            odd = [_parse_deg(d) for d in obj.get("odd_degs", [])]
        else:
            even = [_parse_deg(d) for d in obj.get("even_roots", [])]
            odd = [_parse_deg(d) for d in obj.get("odd_roots", [])]
        return cls.from_degrees(model, even, odd)

    def __str__(self) -> str:
        even = ",".join(str(root_degree(r)) for r in self.even_roots)
        odd = ",".join(str(root_degree(r)) for r in self.odd_roots)
        return f"bundle[{self.model}; even=({even}); odd=({odd})]"


def _parse_deg(value) -> Fraction:
    if isinstance(value, (list, tuple)):
        if len(value) != 1:
            raise ValueError("a root is a single degree-1 coefficient")
        value = value[0]
    return Fraction(value)


def _todd_even_line(root: GradedElement) -> GradedElement:
    """x / (1 - e**-x) as the inverse of sum_{i>=1} (-x)**(i-1) / i!.

    Roots are single degree-1 monomials, so the series row is built from
    scalar powers of the root coefficient before the generic inversion.
    """
    model = root.model
    top = model.top_degree
    coeffs = [ONE]
    if top >= 1:
        acc = ONE
        c = -root.coeffs[1]
        for k in range(1, top + 1):
            acc = acc * c
            coeffs.append(acc * Fraction(1, factorial(k + 1)))
    return GradedElement.from_coeffs(model, coeffs).series_invert()
