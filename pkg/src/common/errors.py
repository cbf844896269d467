"""Error hierarchy shared by every module.

Library code raises these; the CLI maps ``exit_code`` to the process exit status.
"""

from __future__ import annotations

from typing import Any


class LabError(Exception):
    """Base class for all vnlab errors."""

    exit_code: int = 1


class InputError(LabError):
    """Malformed input: shapes, documents, graphs, specs."""

    exit_code = 1


class MembershipError(InputError):
    """An element does not lie in the algebra it was evaluated against."""

    def __init__(self, residual: float, tol: float) -> None:
        super().__init__(f"element is not in the algebra (residual {residual:.3e} > tol {tol:.1e})")
        self.residual = residual
        self.tol = tol


class FaithfulnessFailure(LabError):
    """A minimal central projection has (numerically) zero trace."""

    exit_code = 1

    def __init__(self, block: int, weight: float, tol: float) -> None:
        super().__init__(f"trace is not faithful: block {block} has weight {weight:.3e} < {tol:.1e}")
        self.block = block
        self.weight = weight


class HomomorphismFailure(InputError):
    """perm(g)∘perm(h) differs from perm(gh)."""

    def __init__(self, g: Any, h: Any) -> None:
        super().__init__(f"action is not a homomorphism: perm({g})∘perm({h}) != perm({g}·{h})")
        self.g = g
        self.h = h


class NotMeasurePreserving(InputError):
    """weight(g·x) differs from weight(x)."""

    def __init__(self, g: Any, x: Any) -> None:
        super().__init__(f"action does not preserve the measure: group element {g} moves atom {x}")
        self.g = g
        self.x = x


class NotAnIsomorphism(InputError):
    """A vertex map is not a graph isomorphism."""


class NotAnAutomorphism(InputError):
    """A map offered as a group automorphism fails the law or bijectivity check."""


class CapExceeded(LabError):
    """A configured size cap would be exceeded."""

    exit_code = 2

    def __init__(self, cap: str, limit: int, requested: int) -> None:
        super().__init__(f"cap '{cap}' exceeded: requested {requested}, limit {limit}")
        self.cap = cap
        self.limit = limit
        self.requested = requested


class ConsistencyFailure(LabError):
    """An internal cross-check disagreed."""

    exit_code = 3


def check_cap(cap: str, limit: int, requested: int) -> None:
    """Raise CapExceeded when ``requested`` is above ``limit``."""
    if requested > limit:
        raise CapExceeded(cap, limit, requested)
