"""Compressible two-fluid model with stiffened-gas closure.

State vector (1-D): U = (rho, rho u, E, G, P)
             (2-D): U = (rho, rho u, rho v, E, G, P)

where G = 1/(gamma - 1) and P = gamma pi_inf / (gamma - 1) carry the
material parameters through the flow.  Pressure recovers as

    p = (E - rho |u|^2 / 2 - P) / G

and the sound speed is c = sqrt(gamma (p + pi_inf) / rho).  G and P are
advected quantities: G_t + u G_x = 0, written in nonconservative form, and
likewise for P.  Everything else is a plain Euler flux.
"""

import numpy as np

from .errors import AdmissibilityError

RHO_MIN = 1e-12


def material_coeffs(gamma, pi_inf):
    """(G, P) pair encoding the stiffened-gas parameters."""
    g_coef = 1.0 / (gamma - 1.0)
    p_coef = gamma * pi_inf / (gamma - 1.0)
    return g_coef, p_coef


def conservative_state(rho, u, v, p, gamma, pi_inf, dimension):
    """Conservative state from primitive values (broadcasting)."""
    rho, u, v, p = np.broadcast_arrays(
        np.asarray(rho, float), np.asarray(u, float),
        np.asarray(v, float), np.asarray(p, float))
    gamma = np.broadcast_to(np.asarray(gamma, float), rho.shape)
    pi_inf = np.broadcast_to(np.asarray(pi_inf, float), rho.shape)
    g_coef, p_coef = material_coeffs(gamma, pi_inf)
    kinetic = 0.5 * rho * (u * u + (v * v if dimension == 2 else 0.0))
    energy = g_coef * p + p_coef + kinetic
    if dimension == 1:
        comps = [rho, rho * u, energy, g_coef, p_coef]
    else:
        comps = [rho, rho * u, rho * v, energy, g_coef, p_coef]
    return np.stack(comps, axis=-1)


class Multifluid:
    """Model hooks for the finite-volume driver (1-D or 2-D)."""

    kind = "multifluid"
    reconstruction = "conservative"

    def __init__(self, dimension):
        if dimension not in (1, 2):
            raise ValueError("dimension must be 1 or 2")
        self.dimension = dimension
        self.d = 5 if dimension == 1 else 6
        self.ie = self.d - 3          # energy slot
        self.ig = self.d - 2          # G slot
        self.ip = self.d - 1          # P slot

    def sweep_directions(self):
        return ("x",) if self.dimension == 1 else ("x", "y")

    def momentum_index(self, direction):
        return 1 if direction == "x" else 2

    def wall_normal_index(self, direction):
        return self.momentum_index(direction)

    # ---- thermodynamics -------------------------------------------------

    def primitives(self, state):
        """(rho, u, v, p, gamma, pi_inf); v is zeros in 1-D."""
        rho = state[..., 0]
        u = state[..., 1] / rho
        v = state[..., 2] / rho if self.dimension == 2 else np.zeros_like(u)
        g_coef = state[..., self.ig]
        p_coef = state[..., self.ip]
        kinetic = 0.5 * rho * (u * u + v * v)
        p = (state[..., self.ie] - kinetic - p_coef) / g_coef
        gamma = 1.0 / g_coef + 1.0
        pi_inf = p_coef / (g_coef + 1.0)
        return rho, u, v, p, gamma, pi_inf

    def pressure(self, state):
        return self.primitives(state)[3]

    def sound_speed(self, state):
        rho, _, _, p, gamma, pi_inf = self.primitives(state)
        return np.sqrt(gamma * (p + pi_inf) / rho)

    def validate(self, state, where="state"):
        rho = state[..., 0]
        if not np.all(np.isfinite(state)):
            raise AdmissibilityError("non-finite %s" % where)
        if np.any(rho <= RHO_MIN):
            raise AdmissibilityError(
                "non-positive density in %s (min %.3e)" % (where, rho.min()))
        if np.any(state[..., self.ig] <= 0.0):
            raise AdmissibilityError("non-positive G coefficient in " + where)
        _, _, _, p, _, pi_inf = self.primitives(state)
        if np.any(p + pi_inf <= 0.0):
            raise AdmissibilityError(
                "non-positive p + pi_inf in %s (min %.3e)"
                % (where, (p + pi_inf).min()))

    # ---- fluxes and eigenstructure --------------------------------------

    def flux(self, state, direction):
        rho = state[..., 0]
        mom = state[..., self.momentum_index(direction)]
        w = mom / rho
        g_coef = state[..., self.ig]
        p_coef = state[..., self.ip]
        if self.dimension == 2:
            kinetic = 0.5 * (state[..., 1] ** 2 + state[..., 2] ** 2) / rho
        else:
            kinetic = 0.5 * state[..., 1] ** 2 / rho
        p = (state[..., self.ie] - kinetic - p_coef) / g_coef
        out = state * w[..., None]
        out[..., self.momentum_index(direction)] += p
        out[..., self.ie] += p * w
        out[..., self.ig] = 0.0
        out[..., self.ip] = 0.0
        return out

    def eigenvalues(self, state, direction):
        rho, u, v, p, gamma, pi_inf = self.primitives(state)
        w = u if direction == "x" else v
        csq = gamma * (p + pi_inf) / rho
        if np.any(csq <= 0.0) or not np.all(np.isfinite(csq)):
            raise AdmissibilityError(
                "wave-speed evaluation needs p + pi_inf > 0 and rho > 0 "
                "(min p + pi_inf %.3e)" % float((p + pi_inf).min()))
        c = np.sqrt(csq)
        mids = [w] * (self.d - 2)
        return np.stack([w - c] + mids + [w + c], axis=-1)

    def noncons_increment(self, state_a, state_b, direction):
        """Path increment of B u_xi across the segment from a to b.

        B has -u on the G and P rows, evaluated at the segment midpoint
        (velocity of the mean state), so the increment is
        (-u_mid dG, -u_mid dP) on those rows and zero elsewhere.
        """
        mid = 0.5 * (state_a + state_b)
        u_mid = mid[..., self.momentum_index(direction)] / mid[..., 0]
        out = np.zeros_like(state_a)
        out[..., self.ig] = -u_mid * (state_b[..., self.ig] - state_a[..., self.ig])
        out[..., self.ip] = -u_mid * (state_b[..., self.ip] - state_a[..., self.ip])
        return out

    def _hatted(self, avg_left, avg_right):
        """Arithmetic means of the per-cell primitive values."""
        prim_l = self.primitives(avg_left)
        prim_r = self.primitives(avg_right)
        rho, u, v, p, gamma, pi_inf = (0.5 * (a + b)
                                       for a, b in zip(prim_l, prim_r))
        csq = gamma * (p + pi_inf) / rho
        if np.any(csq <= 0.0) or not np.all(np.isfinite(csq)):
            raise AdmissibilityError(
                "characteristic decomposition needs p + pi_inf > 0")
        return u, v, p, gamma, np.sqrt(csq)

    def lcd_matrices(self, avg_left, avg_right, direction):
        """Eigenvector matrices (R, R^-1) and eigenvalues at the face.

        Inputs are the cell averages adjacent to each interface; shapes
        (..., d).  Returns (R, Rinv, lam) with matrix shapes (..., d, d).
        """
        if direction == "y":
            swap = self._swap_momenta
            r_mat, r_inv, lam = self._lcd_x(swap(avg_left), swap(avg_right))
            r_mat = r_mat[..., [0, 2, 1, 3, 4, 5], :]
            r_inv = r_inv[..., :, [0, 2, 1, 3, 4, 5]]
            return r_mat, r_inv, lam
        return self._lcd_x(avg_left, avg_right)

    def _swap_momenta(self, state):
        return state[..., [0, 2, 1, 3, 4, 5]]

    def _lcd_x(self, avg_left, avg_right):
        u, v, p, gamma, c = self._hatted(avg_left, avg_right)
        g = gamma - 1.0
        shape = u.shape + (self.d, self.d)
        r_mat = np.zeros(shape)
        r_inv = np.zeros(shape)
        c2 = c * c
        inv2c2 = 0.5 / c2
        if self.dimension == 1:
            enth = c2 / g + 0.5 * u * u
            r_mat[..., 0, 0] = 1.0
            r_mat[..., 0, 1] = 1.0
            r_mat[..., 0, 4] = 1.0
            r_mat[..., 1, 0] = u - c
            r_mat[..., 1, 1] = u
            r_mat[..., 1, 4] = u + c
            r_mat[..., 2, 0] = enth - u * c
            r_mat[..., 2, 1] = 0.5 * u * u
            r_mat[..., 2, 2] = p
            r_mat[..., 2, 4] = enth + u * c
            r_mat[..., 3, 2] = 1.0
            r_mat[..., 3, 3] = -1.0
            r_mat[..., 4, 3] = p

            r_inv[..., 0, 0] = (0.5 * g * u * u + u * c) * inv2c2
            r_inv[..., 0, 1] = (-c - g * u) * inv2c2
            r_inv[..., 0, 2] = g * inv2c2
            r_inv[..., 0, 3] = -g * p * inv2c2
            r_inv[..., 0, 4] = -g * inv2c2
            r_inv[..., 1, 0] = (2.0 * c2 - g * u * u) * inv2c2
            r_inv[..., 1, 1] = 2.0 * g * u * inv2c2
            r_inv[..., 1, 2] = -2.0 * g * inv2c2
            r_inv[..., 1, 3] = 2.0 * g * p * inv2c2
            r_inv[..., 1, 4] = 2.0 * g * inv2c2
            r_inv[..., 2, 3] = 1.0
            r_inv[..., 2, 4] = 1.0 / p
            r_inv[..., 3, 4] = 1.0 / p
            r_inv[..., 4, 0] = (0.5 * g * u * u - u * c) * inv2c2
            r_inv[..., 4, 1] = (c - g * u) * inv2c2
            r_inv[..., 4, 2] = g * inv2c2
            r_inv[..., 4, 3] = -g * p * inv2c2
            r_inv[..., 4, 4] = -g * inv2c2
        else:
            kin = 0.5 * (u * u + v * v)
            enth = c2 / g + kin
            r_mat[..., 0, 0] = 1.0
            r_mat[..., 0, 1] = 1.0
            r_mat[..., 0, 5] = 1.0
            r_mat[..., 1, 0] = u - c
            r_mat[..., 1, 1] = u
            r_mat[..., 1, 5] = u + c
            r_mat[..., 2, 0] = v
            r_mat[..., 2, 1] = v
            r_mat[..., 2, 2] = 1.0
            r_mat[..., 2, 5] = v
            r_mat[..., 3, 0] = enth - u * c
            r_mat[..., 3, 1] = kin
            r_mat[..., 3, 2] = v
            r_mat[..., 3, 3] = p
            r_mat[..., 3, 5] = enth + u * c
            r_mat[..., 4, 3] = 1.0
            r_mat[..., 4, 4] = 1.0
            r_mat[..., 5, 4] = -p

            r_inv[..., 0, 0] = (g * kin + u * c) * inv2c2
            r_inv[..., 0, 1] = (-c - g * u) * inv2c2
            r_inv[..., 0, 2] = -g * v * inv2c2
            r_inv[..., 0, 3] = g * inv2c2
            r_inv[..., 0, 4] = -g * p * inv2c2
            r_inv[..., 0, 5] = -g * inv2c2
            r_inv[..., 1, 0] = (2.0 * c2 - 2.0 * g * kin) * inv2c2
            r_inv[..., 1, 1] = 2.0 * g * u * inv2c2
            r_inv[..., 1, 2] = 2.0 * g * v * inv2c2
            r_inv[..., 1, 3] = -2.0 * g * inv2c2
            r_inv[..., 1, 4] = 2.0 * g * p * inv2c2
            r_inv[..., 1, 5] = 2.0 * g * inv2c2
            r_inv[..., 2, 0] = -v
            r_inv[..., 2, 2] = 1.0
            r_inv[..., 3, 4] = 1.0
            r_inv[..., 3, 5] = 1.0 / p
            r_inv[..., 4, 5] = -1.0 / p
            r_inv[..., 5, 0] = (g * kin - u * c) * inv2c2
            r_inv[..., 5, 1] = (c - g * u) * inv2c2
            r_inv[..., 5, 2] = -g * v * inv2c2
            r_inv[..., 5, 3] = g * inv2c2
            r_inv[..., 5, 4] = -g * p * inv2c2
            r_inv[..., 5, 5] = -g * inv2c2

        mids = [u] * (self.d - 2)
        lam = np.stack([u - c] + mids + [u + c], axis=-1)
        return r_mat, r_inv, lam

    def quasilinear_matrix(self, state, direction):
        """Full Jacobian-plus-B matrix A of the quasilinear form."""
        if direction == "y":
            swapped = self.quasilinear_matrix(self._swap_momenta(state), "x")
            swapped = swapped[..., [0, 2, 1, 3, 4, 5], :]
            return swapped[..., :, [0, 2, 1, 3, 4, 5]]
        rho, u, v, p, gamma, pi_inf = self.primitives(state)
        c2 = gamma * (p + pi_inf) / rho
        mat = np.zeros(state.shape[:-1] + (self.d, self.d))
        g1 = gamma - 1.0
        if self.dimension == 1:
            mat[..., 0, 1] = 1.0
            mat[..., 1, 0] = 0.5 * (gamma - 3.0) * u * u
            mat[..., 1, 1] = (3.0 - gamma) * u
            mat[..., 1, 2] = g1
            mat[..., 1, 3] = -g1 * p
            mat[..., 1, 4] = -g1
            mat[..., 2, 0] = -u * c2 / g1 + (0.5 * gamma - 1.0) * u ** 3
            mat[..., 2, 1] = c2 / g1 + (1.5 - gamma) * u * u
            mat[..., 2, 2] = gamma * u
            mat[..., 2, 3] = -g1 * p * u
            mat[..., 2, 4] = -g1 * u
            mat[..., 3, 3] = u
            mat[..., 4, 4] = u
        else:
            q2 = u * u + v * v
            mat[..., 0, 1] = 1.0
            mat[..., 1, 0] = 0.5 * (gamma - 3.0) * u * u + 0.5 * g1 * v * v
            mat[..., 1, 1] = (3.0 - gamma) * u
            mat[..., 1, 2] = -g1 * v
            mat[..., 1, 3] = g1
            mat[..., 1, 4] = -g1 * p
            mat[..., 1, 5] = -g1
            mat[..., 2, 0] = -u * v
            mat[..., 2, 1] = v
            mat[..., 2, 2] = u
            mat[..., 3, 0] = -u * c2 / g1 + (0.5 * gamma - 1.0) * u * q2
            mat[..., 3, 1] = c2 / g1 + (1.5 - gamma) * u * u + 0.5 * v * v
            mat[..., 3, 2] = -g1 * u * v
            mat[..., 3, 3] = gamma * u
            mat[..., 3, 4] = -g1 * p * u
            mat[..., 3, 5] = -g1 * u
            mat[..., 4, 4] = u
            mat[..., 5, 5] = u
        return mat
