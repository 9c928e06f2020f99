"""Exception hierarchy shared by every module."""

from __future__ import annotations

from typing import Any


class SSpecError(Exception):
    """Base class for all errors raised by sspec."""


class InvalidParameterError(SSpecError, ValueError):
    pass


class CapacityError(SSpecError):
    """A configured size cap would be exceeded."""


class RingValidationError(SSpecError, ValueError):
    """Operation tables fail a ring axiom.

    ``axiom`` names the failed axiom, ``witness`` holds the offending
    elements (usually a triple) so the failure can be replayed by hand.
    """

    def __init__(self, axiom: str, witness: tuple[int, ...] = ()):
        self.axiom = axiom
        self.witness = tuple(witness)
        msg = f"ring axiom violated: {axiom}"
        if witness:
            msg += f" (witness {self.witness})"
        super().__init__(msg)


class InvalidMultSetError(SSpecError, ValueError):
    """Candidate generators do not close to a multiplicatively closed set."""


class TheoremCounterexample(SSpecError):
    """A computation contradicts a proved statement.

    Raised by operations whose result is guaranteed to exist; the verifier
    turns these into ``fail`` records instead of letting them crash a run.
    """

    def __init__(self, message: str, payload: dict[str, Any] | None = None):
        self.payload = payload or {}
        super().__init__(message)
