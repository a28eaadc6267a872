"""Exception hierarchy shared by all dirac_warp modules.

The CLI maps these onto process exit codes, so library code should raise
the most specific class that applies rather than bare ValueError.
"""


class DiracWarpError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DiracWarpError, ValueError):
    """An argument lies outside the domain an operation is defined on."""


class NonInvertibleBoundaryError(DiracWarpError):
    """The boundary operator has a kernel (effective mass m = k + A is zero,
    or the gauge value sits on the mode lattice), so spectral projections
    and the eta reduction are undefined."""


class DegenerateDeltaError(DiracWarpError):
    """The smoothing parameter equals the degenerate value 2/ell(T), where
    the zero-eigenvalue matching condition holds identically and boundary
    zeros can no longer be isolated."""


class NontransverseCrossingError(DiracWarpError):
    """Spectral flow was requested on a path with nontransverse boundary
    zeros and no policy to exclude them.

    The offending crossing records are attached as ``crossings``.
    """

    def __init__(self, message, crossings=()):
        super().__init__(message)
        self.crossings = tuple(crossings)


class IntegrationError(DiracWarpError):
    """Adaptive integration failed (step-size underflow or an invariant
    monitor was violated). ``t_fail`` holds the abscissa of failure when
    known."""

    def __init__(self, message, t_fail=None):
        super().__init__(message)
        self.t_fail = t_fail


class ConfigError(DiracWarpError, ValueError):
    """A run configuration violates one or more module preconditions.
    ``violations`` lists every individual problem found."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))
