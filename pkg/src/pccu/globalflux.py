"""Path integrals of the nonconservative products and source terms.

The global flux K = F - W trades the nonconservative terms B u_xi + S for
the running integral W(xi) = int_anchor^xi (B u_xi' + S) dxi', accumulated
left to right along each sweep line with W = 0 at the left edge of the
padded line.  Only differences of W enter the scheme, so the anchor is
immaterial.

Two accumulation modes are provided:

* interleave_cell_halves: per-cell left/right half integrals (evaluated
  from cell averages) are chained to give single-valued values of W at
  every cell center and interface.  Used by the equilibrium-reconstruction
  path, where the same W must feed both the cell equilibrium variables and
  the interface inversions.

* interleave_jumps_cells: per-interface jump terms B(mid) (u+ - u-) and
  in-cell terms B(avg) (inner jump) are chained to give the two one-sided
  values W^-|f (left of the jump) and W^+|f (right of the jump) at every
  interface.  Used with conservative-variable reconstruction, where W may
  be double-valued at the interfaces.
"""

import numpy as np


def interleave_cell_halves(half_left, half_right):
    """Chain per-cell half integrals into center and interface values.

    half_left/half_right: (L, n + 2g, d) contributions of the left/right
    half of every padded cell.  Returns (w_center, w_face) with w_center
    of shape (L, n + 2g, d) (value at each cell center) and w_face of
    shape (L, n+1, d) (single-valued W at interfaces 0..n, which sit to
    the right of padded cells 1..n+1).
    """
    nl, nc, d = half_left.shape
    stacked = np.stack([half_left, half_right], axis=2).reshape(nl, 2 * nc, d)
    cum = np.cumsum(stacked, axis=1)
    w_center = cum[:, 0::2, :]
    w_right_face = cum[:, 1::2, :]
    w_face = w_right_face[:, 1:nc - 2, :]
    return w_center, w_face


def interleave_jumps_cells(jump, cell):
    """Chain interface jumps and in-cell integrals into one-sided W.

    jump: (L, n+1, d) contribution of the jump at interfaces 0..n;
    cell: (L, n, d) in-cell contribution of interior cells (padded cells
    2..n+1, each sitting between two of the interfaces).  Returns
    (w_minus, w_plus), both (L, n+1, d): the values immediately left and
    right of each interface, with w_minus = 0 at interface 0.
    """
    nl, nf, d = jump.shape
    n = nf - 1
    inc = np.empty((nl, 2 * n + 1, d), dtype=jump.dtype)
    inc[:, 0::2, :] = jump
    inc[:, 1::2, :] = cell
    cum = np.cumsum(inc, axis=1)
    w_plus = cum[:, 0::2, :]
    w_minus = np.zeros_like(w_plus)
    w_minus[:, 1:, :] = cum[:, 1::2, :]
    return w_minus, w_plus
