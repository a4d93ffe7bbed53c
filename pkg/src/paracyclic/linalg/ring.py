"""Coefficient rings: the integers, the rationals and Z/m.

Elements are plain Python ints for ``Z`` and ``Z/m`` (canonical
representatives ``0 <= a < m``) and sympy ``QQ`` elements for ``Q``.
Matrices are stored over the sympy domain of the ring: ``ZZ``, ``QQ``,
``GF(p)`` for a prime modulus, and ``ZZ`` (reduced after each operation)
for a composite one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Any

from sympy import Rational, igcd, isprime
from sympy.polys.domains import GF, QQ, ZZ
from sympy.polys.domains.domain import Domain

from paracyclic.core.errors import MalformedInput, NotInvertible, UnsupportedRing

Scalar = Any


class RingKind(str, Enum):
    INTEGERS = "Z"
    RATIONALS = "Q"
    MODULAR = "Z/m"


@dataclass(frozen=True)
class CoefficientRing:
    """A commutative coefficient ring.

    Parameters
    ----------
    kind:
        One of ``Z``, ``Q`` or ``Z/m``.
    modulus:
        The modulus m >= 2 for ``Z/m``; ``None`` otherwise.
    """

    kind: RingKind
    modulus: int | None = None

    def __post_init__(self) -> None:
        if self.kind is RingKind.MODULAR:
            if self.modulus is None or self.modulus < 2:
                raise UnsupportedRing(f"Z/m needs a modulus >= 2, got {self.modulus!r}")
        elif self.modulus is not None:
            raise MalformedInput(f"ring {self.kind.value} takes no modulus")

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------

    @classmethod
    def integers(cls) -> CoefficientRing:
        return cls(RingKind.INTEGERS)

    @classmethod
    def rationals(cls) -> CoefficientRing:
        return cls(RingKind.RATIONALS)

    @classmethod
    def modular(cls, modulus: int) -> CoefficientRing:
        return cls(RingKind.MODULAR, modulus)

    @classmethod
    def parse(cls, spec: str) -> CoefficientRing:
        """Parse ``"Z"``, ``"Q"`` or ``"Z/7"`` (``ZZ``/``QQ`` are accepted too)."""
        text = spec.strip().upper().replace(" ", "")
        if text in ("Z", "ZZ"):
            return cls.integers()
        if text in ("Q", "QQ"):
            return cls.rationals()
        if text.startswith("Z/"):
            try:
                modulus = int(text[2:])
            except ValueError as exc:
                raise MalformedInput(f"bad modulus in ring spec {spec!r}") from exc
            return cls.modular(modulus)
        if not text:
            raise MalformedInput("empty ring")
        raise UnsupportedRing(f"unknown ring {spec!r}; expected Z, Q or Z/m")

    # ------------------------------------------------------------------
    # Properties
    # ------------------------------------------------------------------

    @property
    def is_field(self) -> bool:
        if self.kind is RingKind.RATIONALS:
            return True
        if self.kind is RingKind.MODULAR:
            return bool(isprime(self.modulus))
        return False

    @property
    def is_integers(self) -> bool:
        return self.kind is RingKind.INTEGERS

    @property
    def is_composite_modular(self) -> bool:
        return self.kind is RingKind.MODULAR and not self.is_field

    @property
    def zero(self) -> Scalar:
        return QQ.zero if self.kind is RingKind.RATIONALS else 0

    @property
    def one(self) -> Scalar:
        return QQ.one if self.kind is RingKind.RATIONALS else 1

    @cached_property
    def domain(self) -> Domain:
        """The sympy domain matrices over this ring are stored in."""
        if self.kind is RingKind.RATIONALS:
            return QQ
        if self.kind is RingKind.MODULAR and self.is_field:
            return GF(self.modulus, symmetric=False)
        return ZZ

    def to_domain(self, value: Scalar) -> Any:
        if self.kind is RingKind.RATIONALS:
            return QQ.convert(value)
        return self.domain(int(value))

    def from_domain(self, value: Any) -> Scalar:
        if self.kind is RingKind.RATIONALS:
            return value
        if self.kind is RingKind.INTEGERS:
            return int(value)
        if self.is_field:
            return int(self.domain.to_int(value)) % self.modulus
        return int(value) % self.modulus

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def normalize(self, value: Scalar) -> Scalar:
        """Canonical representative of an already-computed value."""
        if self.kind is RingKind.MODULAR:
            return int(value) % self.modulus
        return value

    def from_int(self, value: int) -> Scalar:
        if self.kind is RingKind.RATIONALS:
            return QQ(int(value))
        return self.normalize(int(value))

    def from_rational(self, numerator: int, denominator: int = 1) -> Scalar:
        """Image of ``numerator/denominator``; raises MalformedInput if undefined."""
        if denominator == 0:
            raise MalformedInput("zero denominator")
        if self.kind is RingKind.RATIONALS:
            return QQ(int(numerator), int(denominator))
        if self.kind is RingKind.INTEGERS:
            if numerator % denominator:
                raise MalformedInput(f"{numerator}/{denominator} is not an integer")
            return numerator // denominator
        if igcd(denominator, self.modulus) != 1:
            raise MalformedInput(f"{denominator} is not invertible in Z/{self.modulus}")
        return (numerator * pow(denominator, -1, self.modulus)) % self.modulus

    def parse_scalar(self, text: str | int) -> Scalar:
        """Parse ``"3"``, ``"-1/2"`` or an int into the ring."""
        if isinstance(text, int):
            return self.from_int(text)
        try:
            value = Rational(str(text).strip())
        except (TypeError, ValueError, SyntaxError) as exc:
            raise MalformedInput(f"not a rational number: {text!r}") from exc
        return self.from_rational(int(value.p), int(value.q))

    def format(self, value: Scalar) -> str:
        if self.kind is RingKind.RATIONALS:
            num, den = QQ.numer(value), QQ.denom(value)
            return str(num) if den == 1 else f"{num}/{den}"
        return str(int(value))

    def is_zero(self, value: Scalar) -> bool:
        return self.normalize(value) == 0

    def is_unit(self, value: Scalar) -> bool:
        value = self.normalize(value)
        if self.kind is RingKind.RATIONALS:
            return value != 0
        if self.kind is RingKind.INTEGERS:
            return value in (1, -1)
        return igcd(value, self.modulus) == 1

    def inverse(self, value: Scalar) -> Scalar:
        value = self.normalize(value)
        if not self.is_unit(value):
            raise NotInvertible(f"{self.format(value)} is not a unit in {self}", determinant=value)
        if self.kind is RingKind.RATIONALS:
            return QQ.one / value
        if self.kind is RingKind.INTEGERS:
            return value
        return pow(value, -1, self.modulus)

    def power(self, value: Scalar, exponent: int) -> Scalar:
        if exponent < 0:
            return self.power(self.inverse(value), -exponent)
        result = self.one
        for _ in range(exponent):
            result = self.normalize(result * value)
        return result

    def to_rational(self, value: Scalar) -> Any:
        """Lift to ``QQ`` (integers and representatives mod m lift as ints)."""
        if self.kind is RingKind.RATIONALS:
            return value
        return QQ(int(value))

    def lift_int(self, value: Scalar) -> int:
        if self.kind is RingKind.RATIONALS:
            if QQ.denom(value) != 1:
                raise NotInvertible(f"{self.format(value)} is not integral")
            return int(QQ.numer(value))
        return int(value)

    def __str__(self) -> str:
        if self.kind is RingKind.MODULAR:
            return f"Z/{self.modulus}"
        return self.kind.value


__all__ = ["CoefficientRing", "RingKind", "Scalar"]
