"""Exception hierarchy shared by all picketlab modules."""

from __future__ import annotations


class PicketlabError(Exception):
    """Base class for all errors raised by this package."""


class GroupMismatchError(PicketlabError):
    """Two values that must share one group type do not."""


class WordSizeError(PicketlabError):
    """Group order p**N exceeds the machine-word guard."""


class PreconditionError(PicketlabError):
    """An operation was called outside its documented precondition."""


class NotEligibleError(PicketlabError):
    """A pair (G, U) fails the eligibility check of the requested decomposition.

    Carries the violated condition and a concrete witness element.
    """

    def __init__(self, condition: str, witness=None):
        self.condition = condition
        self.witness = witness
        msg = condition if witness is None else f"{condition}; witness: {witness}"
        super().__init__(msg)


class VerificationError(PicketlabError):
    """An internal invariant failed after construction.

    This always signals an implementation bug, never invalid input.
    """
