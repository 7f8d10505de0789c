"""Exact arithmetic in the rank-2 coefficient ring Q[P], P**2 = 1.

Every class, degree and multiplicity in this package is a SuperScalar:
an element ``body + P*soul`` with exact rational components, where P is
the parity-change involution.  Because P**2 = 1 the ring splits into two
eigenlines spanned by the idempotents (1 + P)/2 and (1 - P)/2, and an
element is invertible exactly when body**2 != soul**2.  No floating
point is used anywhere.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class NotInvertible(ArithmeticError):
    """Inversion of a zero divisor of Q[P] (body**2 == soul**2)."""


@dataclass(frozen=True, slots=True)
class SuperScalar:
    """Element body + P*soul of Q[P] with P**2 = 1."""

    body: Fraction
    soul: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.body, Fraction):
            object.__setattr__(self, "body", Fraction(self.body))
        if not isinstance(self.soul, Fraction):
            object.__setattr__(self, "soul", Fraction(self.soul))

    # -- ring operations ---------------------------------------------

    def __add__(self, other: "SuperScalar | RationalLike") -> "SuperScalar":
        other = coerce(other)
        if not other:
            return self
        if not self:
            return other
        return _ss(self.body + other.body, self.soul + other.soul)

    __radd__ = __add__

    def __sub__(self, other: "SuperScalar | RationalLike") -> "SuperScalar":
        other = coerce(other)
        if not other:
            return self
        return _ss(self.body - other.body, self.soul - other.soul)

    def __rsub__(self, other: "SuperScalar | RationalLike") -> "SuperScalar":
        return coerce(other) - self

    def __neg__(self) -> "SuperScalar":
        return _ss(-self.body, -self.soul)

    def __mul__(self, other: "SuperScalar | RationalLike") -> "SuperScalar":
        # (a + P b)(a' + P b') = (aa' + bb') + P (ab' + a'b),
        # with shortcuts for the frequent soul-free factors
        other = coerce(other)
        a, b = self.body, self.soul
        c, d = other.body, other.soul
        if not b:
            return _ss(a * c, a * d) if d else _ss(a * c, _ZERO_FRACTION)
        if not d:
            return _ss(a * c, b * c)
        return _ss(a * c + b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other: "SuperScalar | RationalLike") -> "SuperScalar":
        return self * coerce(other).invert()

    def __bool__(self) -> bool:
        return bool(self.body) or bool(self.soul)

    @property
    def is_invertible(self) -> bool:
        return self.body * self.body != self.soul * self.soul

    def invert(self) -> "SuperScalar":
        """Multiplicative inverse (a - P b) / (a**2 - b**2).

        Raises NotInvertible on the zero divisors, e.g. 1 - P, since
        (1 - P)(1 + P) = 0.
        """
        norm = self.body * self.body - self.soul * self.soul
        if not norm:
            raise NotInvertible(f"{self} is not invertible in Q[P]")
        return SuperScalar(self.body / norm, -self.soul / norm)

    # -- projections --------------------------------------------------

    @property
    def is_rational(self) -> bool:
        """True when the P-component vanishes."""
        return not self.soul

    @property
    def is_integral(self) -> bool:
        return self.body.denominator == 1 and self.soul.denominator == 1

    # -- rendering / parsing ------------------------------------------

    def __str__(self) -> str:
        if not self.soul:
            return str(self.body)
        mag = abs(self.soul)
        if mag == 1:
            p_part = "P"
        elif mag.denominator == 1:
            p_part = f"{mag}*P"
        else:
            p_part = f"({mag})*P"
        sign = "-" if self.soul < 0 else "+"
        if not self.body:
            return p_part if sign == "+" else f"-{p_part}"
        return f"{self.body} {sign} {p_part}"

    def to_json(self) -> dict:
        return {"body": str(self.body), "soul": str(self.soul)}

    @classmethod
    def from_json(cls, obj: dict) -> "SuperScalar":
        return cls(Fraction(obj.get("body", 0)), Fraction(obj.get("soul", 0)))

    @classmethod
    def parse(cls, text: str) -> "SuperScalar":
        """Parse either the text form ``p/q + (r/s)*P`` or the JSON form."""
        stripped = text.strip()
        if stripped.startswith("{"):
            return cls.from_json(json.loads(stripped))
        compact = stripped.replace(" ", "")
        if not compact:
            raise ValueError("empty scalar")
        body = Fraction(0)
        soul = Fraction(0)
        pos = 0
        while pos < len(compact):
            match = _TERM.match(compact, pos)
            if match is None or match.end() == pos:
                raise ValueError(f"cannot parse scalar {text!r}")
            if pos > 0 and not match.group(1):
                raise ValueError(f"cannot parse scalar {text!r}")
            sign = -1 if match.group(1) == "-" else 1
            coeff_text = match.group(2) or match.group(3)
            has_p = match.group(4) is not None
            if coeff_text is None and not has_p:
                raise ValueError(f"cannot parse scalar {text!r}")
            coeff = Fraction(coeff_text) if coeff_text is not None else Fraction(1)
            if has_p:
                soul += sign * coeff
            else:
                body += sign * coeff
            pos = match.end()
        return cls(body, soul)


_TERM = re.compile(r"([+-]?)(?:\((\d+(?:/\d+)?)\)|(\d+(?:/\d+)?))?(\*?P)?")

_ZERO_FRACTION = Fraction(0)


def _ss(body: Fraction, soul: Fraction) -> SuperScalar:
    """Internal constructor for results of Fraction arithmetic (no coercion)."""
    out = object.__new__(SuperScalar)
    object.__setattr__(out, "body", body)
    object.__setattr__(out, "soul", soul)
    return out


def coerce(value: "SuperScalar | RationalLike") -> SuperScalar:
    if isinstance(value, SuperScalar):
        return value
    if isinstance(value, (int, Fraction)):
        return SuperScalar(Fraction(value))
    raise TypeError(f"cannot coerce {type(value).__name__} to SuperScalar")


ZERO = SuperScalar(Fraction(0))
ONE = SuperScalar(Fraction(1))
PI = SuperScalar(Fraction(0), Fraction(1))


def pi_power(exponent: int) -> SuperScalar:
    """P**n, which is 1 for even n and P for odd n."""
    return PI if exponent % 2 else ONE
