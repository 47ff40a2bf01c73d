"""Exception hierarchy shared by all modules."""


class UlrichSurfError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(UlrichSurfError):
    """A coefficient vector does not match the lattice rank."""


class AsymmetricGram(UlrichSurfError):
    """The pairing matrix is not symmetric."""


class ParityViolation(UlrichSurfError):
    """Some basis vector b has b.b + b.K odd, breaking adjunction parity."""


class NonIntegralGenus(UlrichSurfError):
    """h^2 + h.K turned out odd; impossible on a parity-valid lattice."""


class NonIntegralChi(UlrichSurfError):
    """The Riemann-Roch half-term is not an integer; defensive check."""


class NonIntegralC2(UlrichSurfError):
    """The special second Chern class formula gave a non-integer."""


class MissingHypothesis(UlrichSurfError):
    """An operation was invoked without its stated cohomological hypotheses."""


class DegenerateForm(UlrichSurfError):
    """The linear form D -> D.h is degenerate, or the solution set is infinite."""


class RankTooHigh(UlrichSurfError):
    """Exact enumeration is only available on lattices of rank at most 2."""


class InvalidPolarization(UlrichSurfError):
    """Polarization parameters outside the very-ampleness window."""


class BoxTooLarge(UlrichSurfError):
    """Bounded enumeration would exceed the iteration ceiling."""


class InvalidDegree(UlrichSurfError):
    """Degree parameter outside the range supported by the family."""


class OutOfRange(UlrichSurfError):
    """Family parameters outside the paper-backed window."""


class ParseError(UlrichSurfError):
    """A surface document is not well-formed."""


class ValidationError(UlrichSurfError):
    """A surface document failed validation.

    Carries the path of the offending field.
    """

    def __init__(self, path, message):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class VerificationFailure(UlrichSurfError):
    """A verification command found a failing check."""


class UnknownBuiltin(UlrichSurfError):
    """No builtin surface with the requested name."""


class InvariantViolation(UlrichSurfError):
    """An internal cross-check failed; indicates a bug, not bad input."""
