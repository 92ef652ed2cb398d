"""Physicists' Hermite polynomials, Hermite functions, and the scaled variants.

F_lambda(y) = H_lambda(y) e^{-y^2/2} is the oscillator eigenfunction with
eigenvalue 2*lambda + 1.  Two rescalings appear downstream: the width
sqrt(2*pi*|n|) adapted to the rectangular lattices and 2*sqrt(pi*l*|n|) adapted
to the square ones.
"""

from __future__ import annotations

import math

import numpy as np

# the three-term recurrence is exact in exact arithmetic and stays stable in
# double precision for the argument ranges arising here up to this order
MAX_ORDER = 200


def _check_order(lam) -> int:
    if not isinstance(lam, (int, np.integer)) or isinstance(lam, bool):
        raise ValueError("lambda must be an integer")
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam > MAX_ORDER:
        raise ValueError(f"lambda = {lam} exceeds the overflow guard {MAX_ORDER}")
    return int(lam)


def hermite_poly(lam: int, y):
    """H_lam(y) via H_{k+1} = 2y H_k - 2k H_{k-1}, H_0 = 1, H_1 = 2y."""
    lam = _check_order(lam)
    y = np.asarray(y, dtype=float)
    h_prev = np.ones_like(y)
    if lam == 0:
        return float(h_prev) if y.ndim == 0 else h_prev
    h = 2.0 * y
    for k in range(1, lam):
        h, h_prev = 2.0 * y * h - 2.0 * k * h_prev, h
    return float(h) if y.ndim == 0 else h


def hermite_function(lam: int, y):
    """F_lam(y) = H_lam(y) exp(-y^2/2)."""
    y = np.asarray(y, dtype=float)
    out = hermite_poly(lam, y) * np.exp(-0.5 * y * y)
    return float(out) if y.ndim == 0 else out


def scaled_hermite(n: int, lam: int, l, scaling: str, x):
    """Rescaled Hermite function used as the transform's line-function seed.

    scaling "plain":  F_lam(sqrt(2 pi |n|) x), the rectangular-lattice width.
    scaling "sqrt2l": F_lam(2 sqrt(pi l |n|) x); at l = 1/2 this degenerates to
    the plain scaling, which is exercised only as a test relation.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    if scaling == "plain":
        scale = math.sqrt(2.0 * math.pi * abs(n))
    elif scaling == "sqrt2l":
        if not l > 0:
            raise ValueError("l must be positive")
        scale = 2.0 * math.sqrt(math.pi * l * abs(n))
    else:
        raise ValueError(f"unknown scaling {scaling!r}")
    x = np.asarray(x, dtype=float)
    out = hermite_function(lam, scale * x)
    return float(out) if x.ndim == 0 else out


def oscillator_weight(n: int, lam: int, l, scaling: str) -> float:
    """Gaussian width parameter c with |seed(x)| <= |H(scale x)| e^{-c x^2}."""
    if scaling == "plain":
        return math.pi * abs(n)
    return 2.0 * math.pi * l * abs(n)
