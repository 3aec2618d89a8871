"""Exception hierarchy. Everything raised on bad input derives from StarconvError."""


class StarconvError(Exception):
    """Base class for usage and validation errors raised by this package."""


class CarrierMismatchError(StarconvError):
    """A value payload does not belong to the carrier it is used with."""


class UnsupportedOperationError(StarconvError):
    """The requested operation is not defined for this carrier."""


class NotAPosetError(StarconvError):
    """The given relation is not antisymmetric after closure."""


class InvalidStructureError(StarconvError):
    """Promonoidal data that violates a construction invariant."""


class NotHeytingError(StarconvError):
    """A lattice without a greatest element in {x : a and x below b}."""


class InvalidAlgebraError(StarconvError):
    """A partial-operation table violating its algebra's axioms."""


class UnknownFixtureError(StarconvError):
    """A gallery fixture name that does not resolve."""


class ParseError(StarconvError):
    """A structure or function document that cannot be decoded."""
