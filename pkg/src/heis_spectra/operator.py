"""Finite-difference application of the operator family L_alpha.

L_alpha = (1/4)(-(P^2 + Q^2) + i alpha S) in the left-invariant frame
P = d/dp, Q = d/dq + p d/ds, S = d/ds, so

    Q^2 = d^2/dq^2 + 2p d^2/(dq ds) + p^2 d^2/ds^2.

All derivatives use central second differences; the mixed term uses the
4-point centered cross stencil.  O(h^2) accurate for smooth f.
"""

from __future__ import annotations

from .group import PolarizedPoint


def apply_folland_stein(f, alpha: float, pt: PolarizedPoint, h: float = 1e-3) -> complex:
    if h <= 0:
        raise ValueError("h must be positive")
    p, q, s = pt.p, pt.q, pt.s
    f0 = f(pt)
    d2p = (f(PolarizedPoint(p + h, q, s)) - 2 * f0 + f(PolarizedPoint(p - h, q, s))) / h**2
    d2q = (f(PolarizedPoint(p, q + h, s)) - 2 * f0 + f(PolarizedPoint(p, q - h, s))) / h**2
    fsp = f(PolarizedPoint(p, q, s + h))
    fsm = f(PolarizedPoint(p, q, s - h))
    d2s = (fsp - 2 * f0 + fsm) / h**2
    ds = (fsp - fsm) / (2 * h)
    dqs = (f(PolarizedPoint(p, q + h, s + h)) - f(PolarizedPoint(p, q + h, s - h))
           - f(PolarizedPoint(p, q - h, s + h)) + f(PolarizedPoint(p, q - h, s - h))) / (4 * h**2)
    q_sq = d2q + 2 * p * dqs + p * p * d2s
    return 0.25 * (-(d2p + q_sq) + 1j * alpha * ds)


def folland_stein_residual(f, alpha: float, E: float, pt: PolarizedPoint, h: float = 1e-3) -> float:
    """|(L_alpha f)(pt) - E f(pt)| with L_alpha discretized at step h."""
    return abs(apply_folland_stein(f, alpha, pt, h) - E * f(pt))
