"""Central-upwind interface fluxes, classical and characteristic-split.

All routines operate on stacked interface arrays of shape (L, nf, d):
L independent sweep lines, nf interfaces per line, d components.
"""

import numpy as np


def local_speeds(lam_minus, lam_plus):
    """Fieldwise one-sided speeds and the extremal pair.

    lam_minus/lam_plus: (L, nf, d) eigenvalues at the left/right
    reconstructed interface states.  Returns (lam_lo, lam_hi, a_lo, a_hi)
    where lam_hi_i = max(lam_i^-, lam_i^+, 0), lam_lo_i = min(..., 0), and
    a_hi/a_lo are the largest/smallest fields (the eigenvalues are ordered).
    """
    lam_hi = np.maximum(np.maximum(lam_minus, lam_plus), 0.0)
    lam_lo = np.minimum(np.minimum(lam_minus, lam_plus), 0.0)
    return lam_lo, lam_hi, lam_lo[..., 0], lam_hi[..., -1]


def split_weights(lam_lo, lam_hi, a_lo, a_hi, eps0):
    """Per-field upwinding weights (P_i, M_i, Q_i).

    For each characteristic field: if the local fan lam_hi_i - lam_lo_i is
    wider than eps0, use the fieldwise central-upwind weights; otherwise
    fall back to the extremal speeds a_hi - a_lo; if those degenerate too,
    use the unweighted average (1/2, 1/2, 0).  By construction P + M = 1
    for every field.
    """
    gap = lam_hi - lam_lo
    field_ok = gap > eps0
    safe_gap = np.where(field_ok, gap, 1.0)
    p_f = lam_hi / safe_gap
    m_f = -lam_lo / safe_gap
    q_f = lam_hi * lam_lo / safe_gap

    agap = a_hi - a_lo
    glob_ok = agap > eps0
    safe_agap = np.where(glob_ok, agap, 1.0)[..., None]
    p_g = np.broadcast_to((a_hi[..., None]) / safe_agap, gap.shape)
    m_g = np.broadcast_to((-a_lo[..., None]) / safe_agap, gap.shape)
    q_g = np.broadcast_to((a_hi * a_lo)[..., None] / safe_agap, gap.shape)

    glob = glob_ok[..., None] & ~field_ok
    p = np.where(field_ok, p_f, np.where(glob, p_g, 0.5))
    m = np.where(field_ok, m_f, np.where(glob, m_g, 0.5))
    q = np.where(field_ok, q_f, np.where(glob, q_g, 0.0))
    return p, m, q


def extremal_weights(a_lo, a_hi, d, eps0):
    """Weights giving every field the extremal speeds a_lo/a_hi.

    Feeding these through characteristic_flux reproduces the classical
    central-upwind flux (the R / R^-1 factors cancel).
    """
    agap = a_hi - a_lo
    ok = (agap > eps0)[..., None]
    safe = np.where(ok, agap[..., None], 1.0)
    shape = a_hi.shape + (d,)
    p = np.broadcast_to(np.where(ok, a_hi[..., None] / safe, 0.5), shape)
    m = np.broadcast_to(np.where(ok, -a_lo[..., None] / safe, 0.5), shape)
    q = np.broadcast_to(np.where(ok, (a_hi * a_lo)[..., None] / safe, 0.0), shape)
    return p, m, q


def characteristic_flux(r_mat, r_inv, p, m, q, k_minus, k_plus, du):
    """Assemble the interface flux in characteristic variables.

    flux = R [ P * (R^-1 K^-) + M * (R^-1 K^+) + Q * (R^-1 (U_breve^+ - U_breve^-)) ]
    with the weights applied fieldwise.
    """
    cm = np.einsum('...ij,...j->...i', r_inv, k_minus)
    cp = np.einsum('...ij,...j->...i', r_inv, k_plus)
    cj = np.einsum('...ij,...j->...i', r_inv, du)
    return np.einsum('...ij,...j->...i', r_mat, p * cm + m * cp + q * cj)


def central_upwind_flux(a_lo, a_hi, k_minus, k_plus, du, eps0):
    """Classical central-upwind interface flux.

    (a_hi K^- - a_lo K^+) / (a_hi - a_lo) + a_hi a_lo / (a_hi - a_lo) * du,
    falling back to the plain average when the speeds degenerate.  Equals
    the characteristic assembly with all fields given the extremal weights.
    """
    agap = a_hi - a_lo
    ok = agap > eps0
    safe = np.where(ok, agap, 1.0)[..., None]
    hi = a_hi[..., None]
    lo = a_lo[..., None]
    upwind = (hi * k_minus - lo * k_plus) / safe + (hi * lo / safe) * du
    return np.where(ok[..., None], upwind, 0.5 * (k_minus + k_plus))
