"""Exception hierarchy shared across the package."""


class UnruhChanError(Exception):
    """Base class for all package-specific errors."""


class UsageError(UnruhChanError):
    """Invalid arguments or flag combinations (CLI exit code 2)."""


class TruncationError(UnruhChanError):
    """Fock-space cutoff too small for the requested tolerance (exit code 3)."""


class NumericError(UnruhChanError):
    """A numerical sanity check failed, e.g. a non-Hermitian reduction (exit code 3)."""


class BracketError(UnruhChanError):
    """A bisection bracket does not straddle the sought transition."""
