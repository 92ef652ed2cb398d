"""Dual lattices, torus characters, and full spectrum enumeration.

The spectrum of the operator family on a lattice quotient splits into a torus
sector (characters of the abelianization, eigenvalues pi^2 (mu^2 + nu^2)) and
an oscillator sector (central frequency n != 0, eigenvalues
(pi |n| / 2)(2 lambda + 1 - alpha sgn n) with multiplicity given by the
covering rectangular width times |n|).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .group import LatticeSpec, PolarizedPoint


@dataclass(frozen=True)
class DualLatticePoint:
    mu: float
    nu: float


@dataclass(frozen=True)
class OscillatorOrigin:
    n: int
    lam: int


@dataclass(frozen=True)
class TorusOrigin:
    points: tuple[DualLatticePoint, ...]


@dataclass(frozen=True)
class SpectralLine:
    value: float
    multiplicity: int
    origin: TorusOrigin | OscillatorOrigin


def torus_character(mu_nu: DualLatticePoint, pt: PolarizedPoint) -> complex:
    """chi_{mu,nu}(p,q,s) = e^{2 pi i (mu p + nu q)}; kills the central direction."""
    return complex(np.exp(2j * math.pi * (mu_nu.mu * pt.p + mu_nu.nu * pt.q)))


def dual_lattice(lattice: LatticeSpec) -> tuple[DualLatticePoint, DualLatticePoint]:
    """Generators of the dual of the projected (p,q) lattice."""
    if lattice.kind == "standard-rect":
        return DualLatticePoint(1.0, 0.0), DualLatticePoint(0.0, 1.0 / lattice.l)
    w = 1.0 / math.sqrt(2.0 * lattice.l)
    return DualLatticePoint(w, 0.0), DualLatticePoint(0.0, w)


def oscillator_eigenvalue(n: int, lam: int, alpha: float) -> float:
    if n == 0:
        raise ValueError("n must be nonzero")
    sgn = 1.0 if n > 0 else -1.0
    return (math.pi * abs(n) / 2.0) * (2 * lam + 1 - alpha * sgn)


def _torus_lines(lattice: LatticeSpec, tmax: float) -> list[SpectralLine]:
    g1, g2 = dual_lattice(lattice)
    m1, m2 = g1.mu, g2.nu
    imax = int(math.floor(math.sqrt(tmax) / (math.pi * m1)))
    kmax = int(math.floor(math.sqrt(tmax) / (math.pi * m2)))
    entries = []
    for i in range(-imax, imax + 1):
        for k in range(-kmax, kmax + 1):
            mu, nu = i * m1, k * m2
            val = math.pi**2 * (mu * mu + nu * nu)
            if val <= tmax:
                entries.append((val, mu, nu))
    entries.sort()
    lines = []
    idx = 0
    while idx < len(entries):
        ref = entries[idx][0]
        group = [entries[idx]]
        idx += 1
        # relative grouping tolerance; exact duplicates always coalesce
        while idx < len(entries) and abs(entries[idx][0] - ref) <= 1e-9 * max(1.0, ref):
            group.append(entries[idx])
            idx += 1
        pts = tuple(DualLatticePoint(mu, nu) for _, mu, nu in sorted(group, key=lambda e: (e[1], e[2])))
        lines.append(SpectralLine(ref, len(pts), TorusOrigin(pts)))
    return lines


def _oscillator_lines(lattice: LatticeSpec, alpha: float, tmax: float) -> list[SpectralLine]:
    width = lattice.covering_width
    lines = []
    for sgn in (1, -1):
        factor0 = 1 - alpha * sgn
        lam = 0
        while (math.pi / 2.0) * (2 * lam + factor0) <= tmax:
            base = (math.pi / 2.0) * (2 * lam + factor0)
            if base > 0:
                mmax = int(math.floor(tmax / base))
                for m in range(1, mmax + 1):
                    lines.append(SpectralLine(base * m, width * m, OscillatorOrigin(sgn * m, lam)))
            lam += 1
    return lines


def _sort_key(line: SpectralLine):
    if isinstance(line.origin, TorusOrigin):
        p = line.origin.points[0]
        return (line.value, 0, p.mu, p.nu, 0)
    return (line.value, 1, line.origin.n, line.origin.lam, 0)


def enumerate_spectrum(lattice: LatticeSpec, alpha: float, tmax: float) -> list[SpectralLine]:
    """All spectral lines with value <= tmax, sorted ascending.

    Torus lines of equal value are grouped (multiplicity = point count); the
    oscillator family is never merged with the torus family, and oscillator
    lines are kept per (n, lambda) with multiplicity width * |n|.  Zero and
    negative oscillator values (the alpha = +-1 kernels) are excluded.
    """
    if tmax <= 0:
        raise ValueError("tmax must be positive")
    lines = _torus_lines(lattice, tmax) + _oscillator_lines(lattice, alpha, tmax)
    lines.sort(key=_sort_key)
    return lines
