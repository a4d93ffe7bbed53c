"""Exception hierarchy for paracyclic.

Every failure raised by the engine derives from :class:`EngineError`.
Errors caused by malformed caller input also derive from ``ValueError``.
"""

from __future__ import annotations


class EngineError(Exception):
    """Root of all engine errors."""


class MalformedInput(EngineError, ValueError):
    """Unparseable file, schema violation or bad element syntax."""


class NotInvertible(EngineError):
    """A matrix has no (left) inverse over the coefficient ring."""

    def __init__(
        self,
        message: str,
        *,
        determinant: object | None = None,
        rank: int | None = None,
    ) -> None:
        super().__init__(message)
        self.determinant = determinant
        self.rank = rank


class UnsupportedRing(EngineError):
    """The operation is not available over this coefficient ring."""


class CompositeModulus(UnsupportedRing):
    """Rank or kernel requested over Z/m with m composite."""

    def __init__(self, modulus: int, operation: str = "operation") -> None:
        super().__init__(f"{operation} is not supported over Z/{modulus} (composite modulus)")
        self.modulus = modulus


class DegreeMismatch(EngineError):
    """Composition of morphisms whose codomain and domain disagree."""


class InvalidMorphism(EngineError, ValueError):
    """A value sequence does not define a morphism of the index category."""


class IndexOutOfRange(EngineError, ValueError):
    """Face/degeneracy index outside its admissible range."""


class DegreeOutOfRange(EngineError, ValueError):
    """Degree outside the truncation window."""


class ShapeMismatch(EngineError, ValueError):
    """Matrix dimensions inconsistent with the declared ranks."""


class TNotAvailable(EngineError):
    """t_n requested at a degree where it can neither be read nor derived."""


class MissingExtraDegeneracy(EngineError):
    """A duplicial operator was requested on a simplicial-only module."""


class NonNormalizedComponent(EngineError, ValueError):
    """A decomposition component is not killed by the inner faces."""


class InducedSquareNonzero(EngineError):
    """The induced b or d on the normalized complex does not square to zero."""


class InvalidAlgebra(EngineError, ValueError):
    """Structure constants fail associativity or unitality."""


class NonInvertibleAutomorphism(InvalidAlgebra):
    """The twisting map is not an invertible algebra map."""


class InvalidDuchain(EngineError, ValueError):
    """A duchain complex with b² ≠ 0, d² ≠ 0 or bad shapes."""


class NotAComplex(EngineError):
    """Differentials whose composite is nonzero."""
