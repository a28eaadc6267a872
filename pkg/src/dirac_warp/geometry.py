"""Warp-factor geometry of the finite cylinder.

The cylinder [0, T] x S^1 carries the metric dt^2 + f(t)^2 dtheta^2 with
warp factor

    f(t) = e^t + alpha * e^(-t),        alpha > 0,

for which everything downstream needs only three scalars: f and its
derivatives, the accumulated inverse-warp length

    ell(t) = integral_0^t dtau / f(tau)
           = (1/sqrt(alpha)) * (arctan(e^t/sqrt(alpha)) - arctan(1/sqrt(alpha))),

and the Schroedinger-form effective potential of the reduced mode equation.
The arctan closed form is exact for this warp family and is used as the
primary evaluation path; quadrature of 1/f is kept to the test suite as an
independent oracle.

Domain checks are strict: evaluating outside [0, T] raises DomainError
instead of extrapolating, because silent extrapolation corrupts shooting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

# Relative slack for the [0, T] domain check. Adaptive steppers may land a
# few ulps past an endpoint; anything beyond this is a genuine domain error.
_DOMAIN_SLACK = 1e-9


@dataclass(frozen=True)
class WarpProfile:
    """Warp factor f(t) = e^t + alpha e^(-t) on the interval [0, T].

    Only this two-parameter family is implemented; a general smooth-f
    profile would need to supply f, f', f'' and ell with the same
    signatures.
    """

    alpha: float
    T: float

    def __post_init__(self):
        if not (self.alpha > 0.0 and math.isfinite(self.alpha)):
            raise DomainError(f"warp parameter alpha must be positive, got {self.alpha}")
        if not (self.T > 0.0 and math.isfinite(self.T)):
            raise DomainError(f"cylinder length T must be positive, got {self.T}")

    def _check_t(self, t: float) -> None:
        slack = _DOMAIN_SLACK * max(1.0, self.T)
        if not (-slack <= t <= self.T + slack):
            raise DomainError(f"t={t} outside [0, {self.T}]")

    @property
    def ell_T(self) -> float:
        """Total inverse-warp length ell(T)."""
        return eval_ell(self, self.T)


def eval_f(profile: WarpProfile, t: float) -> float:
    """Evaluate the warp factor f(t) = e^t + alpha e^(-t)."""
    profile._check_t(t)
    return math.exp(t) + profile.alpha * math.exp(-t)


def eval_f_derivs(profile: WarpProfile, t: float) -> tuple[float, float, float]:
    """Return (f, f', f'') at t.

    For this family f' = e^t - alpha e^(-t) and f'' = f identically.
    """
    profile._check_t(t)
    ep = math.exp(t)
    em = profile.alpha * math.exp(-t)
    f = ep + em
    return f, ep - em, f


def eval_ell(profile: WarpProfile, t: float) -> float:
    """Accumulated inverse-warp length ell(t) = int_0^t dtau/f(tau).

    Uses the closed arctan antiderivative of 1/(e^t + alpha e^(-t));
    strictly increasing in t with ell(0) = 0.
    """
    profile._check_t(t)
    rb = math.sqrt(profile.alpha)
    return (math.atan(math.exp(t) / rb) - math.atan(1.0 / rb)) / rb


def eval_potential(profile: WarpProfile, m: float, lam: float, t: float) -> float:
    """Effective potential of the reduced scalar mode equation in
    Schroedinger form: V(t) = lam^2 - m^2/f^2 + m f'/f^2."""
    f, fp, _ = eval_f_derivs(profile, t)
    return lam * lam - (m * m) / (f * f) + m * fp / (f * f)
