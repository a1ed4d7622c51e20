"""Exception hierarchy shared by every wainge module."""

from __future__ import annotations


class WaingeError(Exception):
    """Base class for all errors raised by this package."""


class RangeError(WaingeError, ValueError):
    """A numeric value lies outside its permitted interval."""


class DomainError(WaingeError, ValueError):
    """An input is structurally unusable (e.g. a taxonomy with no factors)."""


class UnknownFactorError(WaingeError, LookupError):
    """A factor id does not exist in the taxonomy in use."""


class AggregationError(WaingeError, ValueError):
    """Responses passed to an aggregation step are mutually inconsistent."""


class ElicitationError(WaingeError, ValueError):
    """Required elicitation data is missing (e.g. no attitude responses)."""


class TaxonomyValidationError(WaingeError, ValueError):
    """A taxonomy failed validation; ``violations`` lists the reasons."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class IntegrityError(WaingeError, ValueError):
    """A document breaks referential or structural integrity.

    ``offenders`` lists one human-readable entry per violation.
    """

    def __init__(self, offenders):
        self.offenders = list(offenders)
        super().__init__("; ".join(self.offenders))


class MigrationError(WaingeError, ValueError):
    """A document carries a schema version this build cannot read."""


class ConflictError(WaingeError, RuntimeError):
    """An optimistic-concurrency commit lost the race; reload and retry."""
