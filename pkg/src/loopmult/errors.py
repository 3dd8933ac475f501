"""Exception taxonomy shared across the library.

Contract violations (bad mathematical input, inconsistent data) all derive
from LoopmultError so the CLI can map them to exit code 2, keeping exit
code 1 for usage errors.
"""


class LoopmultError(Exception):
    """Base class for every loopmult-specific error."""


class InvalidLieType(LoopmultError):
    """Unknown family letter or rank outside the allowed range."""


class TowerMismatch(LoopmultError):
    """Operands live over different field towers or Lie types."""


class ZeroSpectralParameter(LoopmultError):
    """Spectral parameters must be nonzero field elements."""


class ConstantTermNotOne(LoopmultError):
    """Coordinate polynomials of a loop weight must have constant term 1."""


class RootOutsideAmbientField(LoopmultError):
    """A coordinate polynomial has an irreducible factor with no root in
    the ambient field; the offending factor is kept for reporting."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class NotAModuleCharacter(LoopmultError):
    """Iterated subtraction of simple characters failed (negative
    coefficient or non-dominant maximal weight)."""


class NotAnLCharacter(LoopmultError):
    """Triangular decomposition of an l-character failed."""


class UnsupportedType(LoopmultError):
    """Operation not available for this Lie type / characteristic without
    a user-supplied character table."""


class NonIntegerMultiplicity(LoopmultError):
    """An orbit formula produced a non-integer value.  For genuine Galois
    data this never happens; it signals an implementation bug or an
    inconsistent synthetic context."""


class FormulaDisagreement(LoopmultError):
    """Two routes that must agree produced different values."""


class CharacteristicMismatch(LoopmultError):
    """Galois context and character engine disagree on the characteristic
    and no explicit override was given."""


class ParseError(LoopmultError):
    """Malformed polynomial / element / type string."""
