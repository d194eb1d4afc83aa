"""Pure-Python/numpy implementations of the hot kernels.

Same algorithms as the compiled extension; selected at import time when the
extension is unavailable or PWLINV_PURE is set.
"""

import math

import numpy as np

TAU = math.tau


def _wrap(d, orient):
    d = math.fmod(d, TAU)
    if orient > 0:
        if d <= 0.0:
            d += TAU
        return d
    if d >= 0.0:
        d -= TAU
    return d


def sweep_arc(a11, a12, a21, a22, t0, width, orient, gap_limit, max_nodes=100000):
    """Signed angle swept by the image direction of a nonsingular 2x2 map
    as the argument runs counterclockwise over [t0, t0+width].

    Adaptive bisection: an interval is accepted once its endpoint image
    directions are less than ``gap_limit`` apart in the ``orient`` sense.
    The image direction moves monotonically (det != 0) and a proper sub-arc
    sweeps less than a full turn, so the oriented wrap of an accepted gap is
    the exact sweep of that interval.
    """

    def psi(t):
        c = math.cos(t)
        s = math.sin(t)
        return math.atan2(a21 * c + a22 * s, a11 * c + a12 * s)

    t1 = t0 + width
    stack = [(t0, t1, psi(t0), psi(t1))]
    total = 0.0
    nodes = 0
    while stack:
        lo, hi, plo, phi = stack.pop()
        gap = _wrap(phi - plo, orient)
        if abs(gap) < gap_limit:
            total += gap
            continue
        mid = 0.5 * (lo + hi)
        nodes += 1
        if mid <= lo or mid >= hi or nodes > max_nodes:
            raise ArithmeticError("arc sweep bisection stalled")
        pm = psi(mid)
        stack.append((mid, hi, pm, phi))
        stack.append((lo, mid, plo, pm))
    return total


def eval_batch(starts, mats, pts):
    """Apply a conewise-linear map to points of shape (m, 2).

    ``starts`` are the sorted piece start angles in [0, 2*pi); ``mats`` has
    shape (n, 2, 2) in the same order.  Points below starts[0] wrap to the
    last piece.
    """
    a = np.arctan2(pts[:, 1], pts[:, 0])
    a = np.where(a < 0.0, a + TAU, a)
    idx = np.searchsorted(starts, a, side="right") - 1
    idx = np.where(idx < 0, len(starts) - 1, idx)
    return np.einsum("kij,kj->ki", mats[idx], pts)
