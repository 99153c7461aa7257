"""Exception taxonomy for the minreg package.

Every error raised on purpose derives from MinregError.  InputError covers
malformed textual input (CLI exit code 2), DomainError covers structurally
valid input that falls outside an operation's domain (CLI exit code 1).
InternalInconsistency and VerificationFailure signal bugs: a theorem the
code relies on failed to hold at runtime, or an independently re-checked
certificate did not validate.  They are never caught and converted.
"""


class MinregError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputError(MinregError):
    """Malformed input text (polynomial, Hilbert function, ideal JSON)."""

    exit_code = 2


class ParseError(InputError):
    """Input string does not match the expected grammar."""


class DomainError(MinregError):
    """Structurally valid input outside the operation's domain."""

    exit_code = 1


class NotAdmissible(DomainError):
    """Polynomial is not the Hilbert polynomial of any subscheme, or an
    integer sequence violates Macaulay growth."""


class LinearVariety(DomainError):
    """Hilbert polynomial of a linear variety (Gotzmann number below 2):
    regularity questions are trivial and outside scope."""


class NegativeDerivative(DomainError):
    """A difference function takes a negative value."""


class RhoTooSmall(DomainError):
    """Requested regularity is below the minimum for this Hilbert polynomial."""


class DegreeMismatch(DomainError):
    """Monomials of different degrees where equal degrees are required."""


class NotBorel(DomainError):
    """Set of monomials is not closed under elementary moves."""


class NotStronglyStable(DomainError):
    """Monomial ideal is not strongly stable."""


class NotSaturated(DomainError):
    """Operation requires a saturated ideal."""


class PreconditionViolation(DomainError):
    """Explicit precondition of a construction does not hold."""


class NoRemovableTerm(DomainError):
    """No monomial with the required minimal variable power can be removed."""


class EmptyClass(DomainError):
    """No scheme with the given Hilbert polynomial and regularity exists."""


class NotSchemeHF(DomainError):
    """Function is not the Hilbert function of any subscheme."""


class AmbientTooSmall(DomainError):
    """No subscheme of the given projective space has this Hilbert polynomial."""


class VerificationFailure(MinregError):
    """Independent re-verification of a constructed certificate failed."""


class InternalInconsistency(MinregError):
    """A structural fact the algorithms rely on failed to hold at runtime."""
