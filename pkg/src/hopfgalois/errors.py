"""Exception types shared across the package."""


class HopfGaloisError(Exception):
    """Base class for all package errors."""


class DivisionByZero(HopfGaloisError):
    """Inversion of the zero scalar."""


class OrderUnavailable(HopfGaloisError):
    """The working cyclotomic field has no primitive root of the requested order."""


class RootUnavailable(HopfGaloisError):
    """A required n-th root does not exist inside the working field."""


class ComoduleAxiomFailure(HopfGaloisError):
    """A proposed coaction violates the comodule or comodule-algebra axioms."""


class NotGaloisError(HopfGaloisError):
    """Operation requires a bijective canonical map."""


class SubspaceMismatch(HopfGaloisError):
    """Equivalent descriptions of the coinvariant subspace disagree."""


class ClosureFailure(HopfGaloisError):
    """A product left the subspace it was expected to preserve."""


class CheckFailure(HopfGaloisError):
    """A constructed map failed its verification."""


class NotCocommutative(HopfGaloisError):
    """Construction requires a cocommutative Hopf algebra."""


class CentreRequired(HopfGaloisError):
    """Construction requires the coinvariant subalgebra to be central."""


class UnsupportedFamily(HopfGaloisError):
    """Enumeration is only implemented for recognized families."""


class NotGaloisObject(HopfGaloisError):
    """Construction requires the coinvariants to be the ground field."""


class CocycleInvalid(HopfGaloisError):
    """A map on group pairs fails the two-cocycle identity or vanishes."""


class InputError(HopfGaloisError):
    """Malformed user-supplied data; carries the offending JSON path."""

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
