"""Exception types shared across the package."""


class CapExceeded(ValueError):
    """An exhaustive search was asked to exceed its configured size cap."""


class OracleBoundExceeded(ValueError):
    """A position lies outside the coin bound of a game-graph oracle."""


class WitnessNotFound(RuntimeError):
    """An existence search guaranteed to succeed came up empty.

    This signals a verification failure (a counterexample to the property
    being checked), not a usage error.
    """
