"""Exception taxonomy.

Three kinds of failure are kept apart because the command line maps them
to different exit codes:

  * usage problems (bad arguments): plain ValueError raised by the
    library entry points;
  * internal computation errors (insufficient precision and the like):
    ComputationError;
  * falsification events: FalsificationError.  These fire when a value
    the theory says must hold fails to hold (an inexact quotient where
    divisibility is guaranteed, a polynomial that does not split where
    complete splitting is guaranteed, a period that never appears).
    They are never caught and papered over.
"""

from __future__ import annotations


class ComputationError(Exception):
    """An internal computation could not be carried out soundly."""


class InsufficientPrecision(ComputationError):
    """A q-expansion was too short for the requested operation."""


class FalsificationError(Exception):
    """A mathematically guaranteed property failed on concrete data."""


class Lemma1Violation(FalsificationError):
    """A lower-weight Hecke polynomial failed to divide the higher one mod ell."""


class SplittingViolation(FalsificationError):
    """A Hecke polynomial did not split completely mod ell where it must."""


class RootNestingViolation(FalsificationError):
    """Root multisets along a weight class failed to be nested prefixes."""


class PeriodNotFound(FalsificationError):
    """No period found within the search bound."""


class NonIntegralTrace(FalsificationError):
    """The trace formula assembled to a non-integer."""
