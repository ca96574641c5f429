"""Semantic exception hierarchy.

Every failure mode raised by the library derives from TransportineqError so
callers (notably the CLI driver) can separate our diagnostics from genuine
bugs.
"""


class TransportineqError(Exception):
    """Base class for all library errors."""


class ExpressionSyntaxError(TransportineqError):
    """Malformed potential expression; ``position`` is a 0-based byte offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (offset {position})")
        self.position = position


class UnknownIdentifier(TransportineqError):
    """Expression references a name that is not in the grammar."""

    def __init__(self, name: str, position: int):
        super().__init__(f"unknown identifier {name!r} (offset {position})")
        self.name = name
        self.position = position


class NonIntegrable(TransportineqError):
    """exp(V) does not have finite mass on the requested domain."""


class QuantileOutOfRange(TransportineqError):
    """Quantile requested at u outside (0, 1)."""


class InverseOutOfRange(TransportineqError):
    """Gaussian CDF inverse requested at u outside (0, 1)."""


class AngularUnbounded(TransportineqError):
    """Angular mass ratio C(h) is numerically infinite."""


class EtaUnbounded(TransportineqError):
    """The rate-derived profile eta fails the boundedness/decay hypothesis."""


class NonConvexCost(TransportineqError):
    """Cost is not convex in |x - y|; quantile coupling is not optimal."""


class NonRadialPerturbation(TransportineqError):
    """Radial pullback cost requested for an angle-dependent density."""


class SizeLimitExceeded(TransportineqError):
    """Discrete OT instance exceeds the supported size."""


class ModeUnsupported(TransportineqError):
    """Distance mode not available for this dimension/setting."""


class NonConstantAngular(TransportineqError):
    """HWI in radial mode requires a constant angular marginal."""


class DegenerateAtOrigin(TransportineqError):
    """Weight evaluation below the origin cutoff without a finite limit."""


class RadiusTooSmall(TransportineqError):
    """Deviation bound requested below the vacuous-radius threshold."""


class AllInfinite(TransportineqError):
    """Every probed exponential moment diverged; no finite rate entry."""


class ConfigError(TransportineqError):
    """Invalid run configuration; ``field`` is a dotted path into the config."""

    def __init__(self, message: str, field: str = ""):
        super().__init__(f"{field}: {message}" if field else message)
        self.field = field
