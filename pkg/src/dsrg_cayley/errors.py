"""Exception types. The CLI maps InputError to exit 2 and caps to exit 3."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class CapExceededError(RuntimeError):
    """A configured size cap would be exceeded."""


class DegenerateConnectionSetError(InputError):
    """Empty or complete connection set: parameters unconstrained."""


class PreconditionError(InputError):
    """A mathematical precondition of the requested operation fails."""


class InfeasibleConstructionError(Exception):
    """A constructor's feasibility conditions fail; carries a witness."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
