"""Shared exception types and the global scale cap.

Exhaustive operations (Cayley BFS, closures, brute-force counting) carry a
hard per-operation cap on n.  The environment variable CODIM_MAX_N can lower
every cap at once for constrained environments; it can never raise one.
"""
from __future__ import annotations

import os

ENV_CAP = "CODIM_MAX_N"


class ScaleError(ValueError):
    """An exhaustive operation was requested beyond its enforced cap."""


class FalsificationError(RuntimeError):
    """A constructive verification found a counterexample to a claimed property."""


class InvalidInversionSetError(ValueError):
    """A pair set violates one of the two inversion-set axioms.

    Carries the failing axiom name ("transitivity" or "interpolation") and a
    witness triple of positions (i, j, k).
    """

    def __init__(self, axiom: str, witness: tuple[int, int, int]):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"{axiom} fails at positions {witness}")


def effective_cap(hard_cap: int) -> int:
    """The hard cap, lowered (never raised) by CODIM_MAX_N if set."""
    raw = os.environ.get(ENV_CAP)
    if raw is None:
        return hard_cap
    try:
        env_cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_CAP} must be an integer, got {raw!r}") from exc
    return min(hard_cap, env_cap)


def check_scale(n: int, hard_cap: int, operation: str) -> None:
    """Raise ScaleError if n exceeds the effective cap for an operation."""
    cap = effective_cap(hard_cap)
    if n > cap:
        raise ScaleError(f"{operation} is capped at n <= {cap}, got n = {n}")
