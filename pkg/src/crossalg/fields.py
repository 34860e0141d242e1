"""Exact scalars: arbitrary-precision rationals and prime fields GF(p).

Rational scalars are `fractions.Fraction` (always reduced, positive
denominator).  GF(p) scalars are `GFElement`.  Both support `+ - * /`,
`==`, and are falsy exactly when zero, so generic matrix code never needs
to know which field it is working over.  Field objects provide parsing,
formatting and construction of scalars; mixing scalars of different
fields is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    """Bad scalar syntax, wrong field, or mixed-field arithmetic."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GFElement:
    """An element of GF(p), stored as the residue in [0, p)."""

    value: int
    p: int

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.p:
            raise FieldError(f"residue {self.value} out of range for GF({self.p})")

    def _same(self, other: "GFElement") -> None:
        if not isinstance(other, GFElement):
            raise FieldError(f"cannot mix GF({self.p}) with {type(other).__name__}")
        if other.p != self.p:
            raise FieldError(f"cannot mix GF({self.p}) with GF({other.p})")

    def __add__(self, other: "GFElement") -> "GFElement":
        self._same(other)
        return GFElement((self.value + other.value) % self.p, self.p)

    def __sub__(self, other: "GFElement") -> "GFElement":
        self._same(other)
        return GFElement((self.value - other.value) % self.p, self.p)

    def __mul__(self, other: "GFElement") -> "GFElement":
        self._same(other)
        return GFElement((self.value * other.value) % self.p, self.p)

    def __truediv__(self, other: "GFElement") -> "GFElement":
        self._same(other)
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return self * other.inverse()

    def __neg__(self) -> "GFElement":
        return GFElement((-self.value) % self.p, self.p)

    def inverse(self) -> "GFElement":
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return GFElement(pow(self.value, self.p - 2, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return f"{self.value} mod {self.p}"


class Rationals:
    """The field of rational numbers; scalars are `Fraction`."""

    characteristic = 0

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def of_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_rational(self, q: Fraction) -> Fraction:
        return Fraction(q)

    def parse(self, s: str) -> Fraction:
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {s!r}: {exc}") from None

    def format(self, x: Fraction) -> str:
        if not isinstance(x, Fraction):
            raise FieldError(f"expected a rational scalar, got {type(x).__name__}")
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Rationals)

    def __hash__(self) -> int:
        return hash("Q")

    def __repr__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The finite field GF(p); scalars are `GFElement` with this p."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise FieldError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    @property
    def one(self) -> GFElement:
        return GFElement(1 % self.p, self.p)

    def of_int(self, n: int) -> GFElement:
        return GFElement(n % self.p, self.p)

    def from_rational(self, q: Fraction) -> GFElement:
        if q.denominator % self.p == 0:
            raise FieldError(f"{q} has no image in GF({self.p})")
        return self.of_int(q.numerator) / self.of_int(q.denominator)

    def parse(self, s: str) -> GFElement:
        text = s.strip()
        if "mod" in text:
            left, _, right = text.partition("mod")
            try:
                residue, modulus = int(left), int(right)
            except ValueError:
                raise FieldError(f"bad GF scalar {s!r}") from None
            if modulus != self.p:
                raise FieldError(f"scalar {s!r} does not live in GF({self.p})")
            return self.of_int(residue)
        try:
            return self.from_rational(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad GF({self.p}) scalar {s!r}: {exc}") from None

    def format(self, x: GFElement) -> str:
        if not isinstance(x, GFElement) or x.p != self.p:
            raise FieldError(f"expected a GF({self.p}) scalar, got {x!r}")
        return str(x)

    def __repr__(self) -> str:
        return f"GF({self.p})"


QQ = Rationals()

Field = Rationals | PrimeField
Scalar = Fraction | GFElement


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(name: str) -> Field:
    """Parse a field declaration: "Q", "GF(7)" or "GF:7"."""
    text = name.strip()
    if text == "Q":
        return QQ
    for prefix, suffix in (("GF(", ")"), ("GF:", "")):
        if text.startswith(prefix) and text.endswith(suffix):
            body = text[len(prefix):len(text) - len(suffix) or None]
            try:
                return GF(int(body))
            except ValueError:
                break
    raise FieldError(f"unknown field {name!r}; expected Q, GF(p) or GF:p")


def format_field(field: Field) -> str:
    return "Q" if isinstance(field, Rationals) else f"GF({field.p})"
