"""Third-order strong-stability-preserving Runge-Kutta stepping."""

import numpy as np

from .errors import NumericalError


def cfl_dt(speed_x, speed_y, dx, dy, cfl):
    """Time step from the CFL condition.

    dt = cfl / (speed_x/dx + speed_y/dy); pass speed_y = 0, dy = 1 in 1-D.
    Returns inf when both speeds vanish (caller clips to the next event).
    """
    rate = speed_x / dx + (speed_y / dy if dy is not None else 0.0)
    if rate <= 0.0:
        return np.inf
    return cfl / rate


def ssprk3_step(u, dt, rhs, rhs0=None, stage_check=None):
    """One SSP-RK3 step u -> u(t + dt).

    rhs maps an array to its tendency.  rhs0, if given, is the precomputed
    tendency at u (saves one evaluation when the caller already needed it
    for the CFL bound).  stage_check(candidate, stage) may raise to abort.
    """
    k = rhs(u) if rhs0 is None else rhs0
    u1 = u + dt * k
    if stage_check is not None:
        stage_check(u1, 1)
    u2 = 0.75 * u + 0.25 * (u1 + dt * rhs(u1))
    if stage_check is not None:
        stage_check(u2, 2)
    out = u / 3.0 + (2.0 / 3.0) * (u2 + dt * rhs(u2))
    if stage_check is not None:
        stage_check(out, 3)
    return out


def finite_stage_check(t):
    """Stage check raising NumericalError on the first non-finite value."""
    def check(candidate, stage):
        if not np.all(np.isfinite(candidate)):
            bad = np.argwhere(~np.isfinite(candidate))
            raise NumericalError(
                "non-finite state (first at index %s)" % (bad[0].tolist(),),
                t=t, stage=stage)
    return check
