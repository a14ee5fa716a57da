"""Exception types shared across the package."""


class QPClusterError(Exception):
    """Base class for all package errors."""


class DivisionByZero(QPClusterError, ZeroDivisionError):
    """Division by an exact zero (number or zero rational function)."""


class PoleAtPoint(QPClusterError):
    """A denominator vanished while evaluating at a numeric point.

    Callers performing randomized verification are expected to resample.
    """


class UnboundVariable(QPClusterError):
    """Evaluation point does not bind every variable of the expression."""


class UnsatisfiableConstraint(QPClusterError):
    """A slack-variable constraint could not be solved at the sampled point."""


class ExhaustedResamples(QPClusterError):
    """Too many consecutive sampled points hit poles; reported, never skipped."""


class IndexOutOfRange(QPClusterError, IndexError):
    """Vertex index outside 1..4n+4."""


class QuiverNotRestored(QPClusterError):
    """A generator word failed to restore the exchange matrix.

    Signals a transcription bug in a word table, never expected at runtime.
    """


class ZeroPhi(QPClusterError):
    """A dependent variable phi_i is zero, so the seed cannot be rebuilt."""


class RootChoiceRequired(QPClusterError):
    """An operation needs a formal root binding that the state does not carry."""


class ZeroDenominator(QPClusterError):
    """A dictionary denominator vanished at the given state."""


class BlockPatternViolation(QPClusterError):
    """A computed Lax matrix does not match its prescribed block sparsity."""
