"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: UsageError -> 2,
ResourceGuardError (and subclasses) -> 3, verification failures -> 1.
"""


class UsageError(ValueError):
    """Caller passed arguments outside an operation's documented domain."""


class ResourceGuardError(RuntimeError):
    """A configurable resource guard (time or memory budget) was exceeded."""


class OracleBudgetError(ResourceGuardError):
    """Exhaustive wedge oracle would exceed the evaluation budget; sample instead."""


class MemoryGuardError(ResourceGuardError):
    """Full matrix materialization would exceed the memory guard; use dimension-only mode."""


class InvariantError(AssertionError):
    """An internal invariant that must never fail did fail."""
