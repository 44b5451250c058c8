"""Thermal (Ripa-type) rotating shallow water model.

State vector U = (h, q, p, hb) with q = h u, p = h v and b the buoyancy;
the pressure term is b h^2 / 2.  Bottom topography Z and the Coriolis
parameter f(y) = f0 + beta y enter through source terms; there are no
nonconservative products (B = 0), so the global flux is K = F - W with W
the running source integral.

The 1-D form drops the x dependence: the state keeps all four components
(q is then a passively advected transverse discharge) and the single sweep
direction behaves like the meridional one.

Reconstruction runs in equilibrium variables

    E = (m, m^2/h + b h^2/2 + R, b, transverse velocity)

with m the discharge along the sweep and R = -W_momentum, so lake-at-rest
and geostrophic-type steady states reconstruct exactly.  Recovering h from
(m, E2, b, R) needs the positive root of psi(h) = m^2/h + b h^2/2 = phi,
which is found with a safeguarded Newton iteration on the monotone branch
containing the guess (the cell average of h next to the interface).
"""

import numpy as np

from .errors import AdmissibilityError, ReconstructionError

H_MIN = 1e-10
NEWTON_TOL = 1e-12
NEWTON_MAX_ITER = 50


def invert_momentum_flux(m, phi, b, guess):
    """Solve m^2/h + b h^2/2 = phi for h > 0, root nearest the guess.

    All inputs broadcast to a common shape.  psi has a single minimum at
    h_crit = (m^2/b)^(1/3); the root is taken on the branch the guess lies
    on, with a bisection fallback keeping the iteration inside a bracket.
    Cells with m == 0.0 use the closed form h = sqrt(2 phi / b) directly,
    so exactly-at-rest data never round-trips through the iteration.
    """
    m, phi, b, guess = np.broadcast_arrays(
        np.asarray(m, float), np.asarray(phi, float),
        np.asarray(b, float), np.asarray(guess, float))
    if np.any(b <= 0.0):
        raise ReconstructionError("non-positive buoyancy at an interface")
    h = np.array(guess, dtype=np.float64, copy=True)

    # m*m == 0.0 also catches |m| small enough that m^2 underflows; the
    # kinetic term is then far below any resolvable thickness and the
    # at-rest closed form is the root of the relevant (upper) branch.
    m2_all = m * m
    still = m2_all == 0.0
    if np.any(still):
        phi0 = phi[still]
        if np.any(phi0 <= 0.0):
            raise ReconstructionError(
                "no positive thickness root (phi <= 0 at rest)")
        h[still] = np.sqrt(2.0 * phi0 / b[still])

    moving = ~still
    if not np.any(moving):
        return h
    bb = b[moving]
    ph = phi[moving]
    m2 = m2_all[moving]
    h_crit = np.cbrt(m2 / bb)
    psi_min = m2 / h_crit + 0.5 * bb * h_crit * h_crit
    if np.any(psi_min > ph):
        raise ReconstructionError(
            "no positive thickness root (momentum flux below critical)")

    on_upper = guess[moving] >= h_crit
    # Bracket [lo, hi] containing the root of the chosen branch.
    lo = np.where(on_upper, h_crit, np.minimum(m2 / ph, h_crit))
    hi = np.where(on_upper, np.maximum(guess[moving], np.sqrt(2.0 * ph / bb) + h_crit),
                  h_crit)
    hh = np.clip(guess[moving], lo, hi)
    res = m2 / hh + 0.5 * bb * hh * hh - ph
    for _ in range(NEWTON_MAX_ITER):
        active = np.abs(res) > NEWTON_TOL
        if not np.any(active):
            break
        deriv = bb * hh - m2 / (hh * hh)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(active, res / np.where(deriv != 0.0, deriv, 1.0), 0.0)
        trial = hh - step
        # Where the root got out of the bracket, fall back to bisection.
        bad = active & ((trial <= lo) | (trial >= hi) | (deriv == 0.0)
                        | ~np.isfinite(trial))
        trial = np.where(bad, 0.5 * (lo + hi), trial)
        hh = np.where(active, trial, hh)
        res = m2 / hh + 0.5 * bb * hh * hh - ph
        # psi rises with h on the upper branch, falls on the lower one.
        above = (res > 0.0) == on_upper
        hi = np.where(active & above, np.minimum(hi, hh), hi)
        lo = np.where(active & ~above, np.maximum(lo, hh), lo)
    else:
        if np.any(np.abs(res) > NEWTON_TOL):
            worst = float(np.max(np.abs(res)))
            raise ReconstructionError(
                "thickness iteration stalled (residual %.3e)" % worst)
    h[moving] = hh
    return h


class ThermalShallowWater:
    """Model hooks for the finite-volume driver (1-D or 2-D)."""

    kind = "trsw"
    reconstruction = "equilibrium"
    d = 4

    def __init__(self, dimension, topography=None, f0=0.0, beta=0.0):
        if dimension not in (1, 2):
            raise ValueError("dimension must be 1 or 2")
        self.dimension = dimension
        self.topography = topography
        self.f0 = float(f0)
        self.beta = float(beta)

    def sweep_directions(self):
        return ("x",) if self.dimension == 1 else ("x", "y")

    def _indices(self, direction):
        """(along-sweep discharge slot, transverse discharge slot)."""
        if self.dimension == 1 or direction == "y":
            return 2, 1
        return 1, 2

    def momentum_index(self, direction):
        return self._indices(direction)[0]

    def wall_normal_index(self, direction):
        return self._indices(direction)[0]

    def coriolis(self, y):
        return self.f0 + self.beta * np.asarray(y, dtype=np.float64)

    def validate(self, state, where="state"):
        if not np.all(np.isfinite(state)):
            raise AdmissibilityError("non-finite %s" % where)
        if np.any(state[..., 0] <= H_MIN):
            raise AdmissibilityError(
                "non-positive thickness in %s (min %.3e)"
                % (where, state[..., 0].min()))
        if np.any(state[..., 3] <= 0.0):
            raise AdmissibilityError("non-positive buoyancy in " + where)

    # ---- fluxes and eigenstructure --------------------------------------

    def flux(self, state, direction):
        ia, it = self._indices(direction)
        h = state[..., 0]
        m = state[..., ia]
        w = m / h
        out = np.empty_like(state)
        out[..., 0] = m
        out[..., ia] = m * w + 0.5 * state[..., 3] * h
        out[..., it] = state[..., it] * w
        out[..., 3] = state[..., 3] * w
        return out

    def eigenvalues(self, state, direction):
        ia, _ = self._indices(direction)
        hb = state[..., 3]
        if np.any(state[..., 0] <= 0.0) or np.any(hb < 0.0):
            raise AdmissibilityError(
                "wave-speed evaluation needs h > 0 and h b >= 0")
        w = state[..., ia] / state[..., 0]
        s = np.sqrt(hb)                     # sqrt(h b) from the hb slot
        return np.stack([w - s, w, w, w + s], axis=-1)

    def _hatted(self, avg_left, avg_right):
        def prim(avg):
            h = avg[..., 0]
            return h, avg[..., 1] / h, avg[..., 2] / h, avg[..., 3] / h
        hl, ul, vl, bl = prim(avg_left)
        hr, ur, vr, br = prim(avg_right)
        h = 0.5 * (hl + hr)
        u = 0.5 * (ul + ur)
        v = 0.5 * (vl + vr)
        b = 0.5 * (bl + br)
        if np.any(b <= 0.0) or np.any(h <= 0.0):
            raise AdmissibilityError(
                "characteristic decomposition needs h > 0 and b > 0")
        return h, u, v, b

    def lcd_matrices(self, avg_left, avg_right, direction):
        h, u, v, b = self._hatted(avg_left, avg_right)
        s = np.sqrt(b * h)
        kap = np.sqrt(b / h)
        shape = h.shape + (4, 4)
        r_mat = np.zeros(shape)
        r_inv = np.zeros(shape)
        inv_b = 1.0 / b
        zonal = self.dimension == 2 and direction == "x"
        wa, wt = (u, v) if zonal else (v, u)
        # Columns: (w - s) wave, two materials, (w + s) wave.
        r_mat[..., 0, 0] = inv_b
        r_mat[..., 0, 1] = -inv_b
        r_mat[..., 0, 3] = inv_b
        r_mat[..., 3, 0] = 1.0
        r_mat[..., 3, 1] = 1.0
        r_mat[..., 3, 3] = 1.0
        r_inv[..., 1, 0] = -0.5 * b
        r_inv[..., 1, 3] = 0.5
        if zonal:
            r_mat[..., 1, 0] = (u - s) * inv_b
            r_mat[..., 1, 1] = -u * inv_b
            r_mat[..., 1, 3] = (u + s) * inv_b
            r_mat[..., 2, 0] = v * inv_b
            r_mat[..., 2, 2] = 1.0
            r_mat[..., 2, 3] = v * inv_b
            r_inv[..., 0, 0] = 0.25 * (b + 2.0 * u * kap)
            r_inv[..., 0, 1] = -0.5 * kap
            r_inv[..., 0, 3] = 0.25
            r_inv[..., 2, 0] = -0.5 * v
            r_inv[..., 2, 2] = 1.0
            r_inv[..., 2, 3] = -0.5 * v * inv_b
            r_inv[..., 3, 0] = 0.25 * (b - 2.0 * u * kap)
            r_inv[..., 3, 1] = 0.5 * kap
            r_inv[..., 3, 3] = 0.25
        else:
            r_mat[..., 1, 0] = u * inv_b
            r_mat[..., 1, 2] = 1.0
            r_mat[..., 1, 3] = u * inv_b
            r_mat[..., 2, 0] = (v - s) * inv_b
            r_mat[..., 2, 1] = -v * inv_b
            r_mat[..., 2, 3] = (v + s) * inv_b
            r_inv[..., 0, 0] = 0.25 * (b + 2.0 * v * kap)
            r_inv[..., 0, 2] = -0.5 * kap
            r_inv[..., 0, 3] = 0.25
            r_inv[..., 2, 0] = -0.5 * u
            r_inv[..., 2, 1] = 1.0
            r_inv[..., 2, 3] = -0.5 * u * inv_b
            r_inv[..., 3, 0] = 0.25 * (b - 2.0 * v * kap)
            r_inv[..., 3, 2] = 0.5 * kap
            r_inv[..., 3, 3] = 0.25
        lam = np.stack([wa - s, wa, wa, wa + s], axis=-1)
        return r_mat, r_inv, lam

    def quasilinear_matrix(self, state, direction):
        h = state[..., 0]
        u = state[..., 1] / h
        v = state[..., 2] / h
        b = state[..., 3] / h
        mat = np.zeros(state.shape[:-1] + (4, 4))
        if self.dimension == 2 and direction == "x":
            mat[..., 0, 1] = 1.0
            mat[..., 1, 0] = 0.5 * b * h - u * u
            mat[..., 1, 1] = 2.0 * u
            mat[..., 1, 3] = 0.5 * h
            mat[..., 2, 0] = -u * v
            mat[..., 2, 1] = v
            mat[..., 2, 2] = u
            mat[..., 3, 0] = -b * u
            mat[..., 3, 1] = b
            mat[..., 3, 3] = u
        else:
            mat[..., 0, 2] = 1.0
            mat[..., 1, 0] = -u * v
            mat[..., 1, 1] = v
            mat[..., 1, 2] = u
            mat[..., 2, 0] = 0.5 * b * h - v * v
            mat[..., 2, 2] = 2.0 * v
            mat[..., 2, 3] = 0.5 * h
            mat[..., 3, 0] = -b * v
            mat[..., 3, 2] = b
            mat[..., 3, 3] = v
        return mat

    # ---- equilibrium reconstruction hooks --------------------------------

    def equilibrium_values(self, lines, r_center, direction):
        """E = (m, m^2/h + b h^2/2 + R, b, transverse velocity)."""
        ia, it = self._indices(direction)
        h = lines[..., 0]
        m = lines[..., ia]
        hb = lines[..., 3]
        out = np.empty_like(lines)
        out[..., 0] = m
        out[..., 1] = m * (m / h) + 0.5 * hb * h + r_center
        out[..., 2] = hb / h
        out[..., 3] = lines[..., it] / h
        return out

    def shared_buoyancy(self, e_minus, e_plus):
        return 0.5 * (e_minus[..., 2] + e_plus[..., 2])

    def equilibrium_invert(self, e_values, r_values, h_guess, direction,
                           b_values=None):
        """Conservative states from equilibrium values at interfaces."""
        ia, it = self._indices(direction)
        m = e_values[..., 0]
        b = e_values[..., 2] if b_values is None else b_values
        phi = e_values[..., 1] - r_values
        h = invert_momentum_flux(m, phi, b, h_guess)
        out = np.empty_like(e_values)
        out[..., 0] = h
        out[..., ia] = m
        out[..., it] = h * e_values[..., 3]
        out[..., 3] = h * b
        return out

    # ---- source integrals -------------------------------------------------

    def source_half_increments(self, lines, geom):
        """Half-cell integrals of the source terms, from cell averages.

        Topography: -<hb> dZ over each half cell, Z sampled at cell centers
        and faces.  Coriolis: along x the momentum source is +f(y) h v with
        f constant on the line; along y it is -f(y) h u integrated exactly
        for affine f (midpoint rule per half cell).  Returns (half_left,
        half_right) of shape lines.shape.
        """
        ia, it = self._indices(geom.direction)
        half_l = np.zeros_like(lines)
        half_r = np.zeros_like(lines)
        centers = geom.coords
        if self.topography is not None:
            faces = np.concatenate([centers - 0.5 * geom.dx,
                                    [centers[-1] + 0.5 * geom.dx]])
            if self.dimension == 1:
                z_c = self.topography(centers)
                z_f = self.topography(faces)
            elif geom.direction == "x":
                y_line = geom.transverse[:, None]
                z_c = self.topography(centers[None, :], y_line)
                z_f = self.topography(faces[None, :], y_line)
            else:
                x_line = geom.transverse[:, None]
                z_c = self.topography(x_line, centers[None, :])
                z_f = self.topography(x_line, faces[None, :])
            hb = lines[..., 3]
            half_l[..., ia] -= hb * (z_c - z_f[..., :-1])
            half_r[..., ia] -= hb * (z_f[..., 1:] - z_c)
        if self.f0 != 0.0 or self.beta != 0.0:
            if geom.direction == "x":
                f_line = self.coriolis(geom.transverse)[:, None]
                seg = 0.5 * geom.dx
                half_l[..., ia] += lines[..., it] * f_line * seg
                half_r[..., ia] += lines[..., it] * f_line * seg
            else:
                seg = 0.5 * geom.dx
                f_lo = self.coriolis(centers - 0.25 * geom.dx)
                f_hi = self.coriolis(centers + 0.25 * geom.dx)
                half_l[..., ia] -= lines[..., it] * f_lo * seg
                half_r[..., ia] -= lines[..., it] * f_hi * seg
        return half_l, half_r
