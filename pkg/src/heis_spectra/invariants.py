"""Action of the crystallographic generators on eigenfunction bases.

For central frequency n != 0 the quotient eigenspace has the Weil-Brezin basis
indexed by (a, b) with a in [0,|n|), b in [0,2l), ordered a-major.  The
half-turn acts by a signed permutation, the quarter-turn by a dense unitary
closely related to a discrete Fourier matrix; fixed-subspace dimensions follow
either from closed forms, from characters and Gauss sums, or from an SVD
nullity oracle, and the three routes are kept separate so they can be compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import null_space

from .group import LatticeSpec
from .weil_brezin import WBIndex, wb_eigenfunction


class IllConditionedError(RuntimeError):
    """A singular value fell inside the threshold's uncertainty band."""


def _check_nl(n: int, lam: int, l: int):
    if n == 0:
        raise ValueError("n must be nonzero")
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if l < 1:
        raise ValueError("l must be a positive integer")


@dataclass(frozen=True, eq=False)
class PullbackMatrix:
    """Matrix of gamma* on the (a, b) basis, metadata carried alongside."""

    generator: str  # "phi" | "psi"
    n: int
    lam: int
    l: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return 2 * self.l * abs(self.n)


def _phi_target(a: int, b: int, n: int, two_l: int) -> tuple[int, int]:
    """Index map of the half-turn pullback: (a,b) -> (a',b')."""
    m = abs(n)
    if b == 0:
        return (-a) % m, 0
    if n > 0:
        return (-a - 1) % m, (two_l - b) % two_l
    return (-a + 1) % m, (two_l - b) % two_l


def phi_pullback_matrix(n: int, lam: int, l: int) -> PullbackMatrix:
    """Signed permutation with single entry (-1)^(n+lam) per column."""
    _check_nl(n, lam, l)
    m = abs(n)
    two_l = 2 * l
    dim = m * two_l
    phase = -1.0 if (n + lam) % 2 else 1.0
    mat = np.zeros((dim, dim), dtype=complex)
    for a in range(m):
        for b in range(two_l):
            a2, b2 = _phi_target(a, b, n, two_l)
            mat[a2 * two_l + b2, a * two_l + b] = phase
    return PullbackMatrix("phi", n, lam, l, mat)


def psi_pullback_matrix(n: int, lam: int, l: int) -> PullbackMatrix:
    """Dense unitary of the quarter-turn pullback; its square is the half-turn's."""
    _check_nl(n, lam, l)
    m = abs(n)
    two_l = 2 * l
    dim = m * two_l
    if n > 0:
        pref = np.exp(0.5j * math.pi * (n + lam)) / math.sqrt(two_l * n)
    else:
        pref = np.exp(0.5j * math.pi * (n + 3 * lam)) / math.sqrt(two_l * m)
    mat = np.empty((dim, dim), dtype=complex)
    for jp in range(m):
        for up in range(two_l):
            xp = jp / m + up / (two_l * n)
            for j in range(m):
                for u in range(two_l):
                    x = j / m + u / (two_l * n)
                    mat[jp * two_l + up, j * two_l + u] = pref * np.exp(
                        -4j * l * n * math.pi * xp * x)
    return PullbackMatrix("psi", n, lam, l, mat)


def fixed_subspace_dim(M, tol: float = 1e-8) -> int:
    """Dimension of the +1 eigenspace as the SVD nullity of (M - I).

    Singular values falling inside [tol/10, 10 tol] make the count unreliable
    and raise IllConditionedError.
    """
    mat = getattr(M, "matrix", M)
    mat = np.asarray(mat, dtype=complex)
    svals = np.linalg.svd(mat - np.eye(mat.shape[0]), compute_uv=False)
    if np.any((svals >= tol / 10) & (svals <= tol * 10)):
        raise IllConditionedError("singular value inside the threshold band")
    return int(np.sum(svals < tol))


def dim_phi_invariant(n: int, lam: int, l: int) -> int:
    """Fixed-subspace dimension under the half-turn: l|n| +- 1 by parity of |n|+lam."""
    _check_nl(n, lam, l)
    m = abs(n)
    return l * m + 1 if (m + lam) % 2 == 0 else l * m - 1


def dim_psi_invariant(n: int, lam: int, l: int) -> int:
    """Fixed-subspace dimension under the quarter-turn, by |n|+lam mod 4.

    With l|n| even the value is l|n|/2 + {1, 0, 0, -1} for residues {0, 1or2, 3};
    with l and |n| both odd it is l|n|/2 +- 1/2, the sign set by residue parity.
    """
    _check_nl(n, lam, l)
    m = abs(n)
    r = (m + lam) % 4
    if m % 2 == 0 or l % 2 == 0:
        base = (l * m) // 2
        if r == 0:
            return base + 1
        if r == 3:
            return base - 1
        return base
    return (l * m + 1) // 2 if r in (0, 2) else (l * m - 1) // 2


def gauss_sum(m: int) -> complex:
    """Closed form of sum_{k<m} e^{2 pi i k^2 / m} by the residue of m mod 4."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    root = math.sqrt(m)
    r = m % 4
    if r == 0:
        return complex(root, root)
    if r == 1:
        return complex(root, 0.0)
    if r == 2:
        return 0j
    return complex(0.0, root)


def gauss_sum_direct(m: int) -> complex:
    """Defining sum, reduced mod m so the phase argument stays small."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    ks = np.arange(m)
    return complex(np.sum(np.exp(2j * math.pi * ((ks * ks) % m) / m)))


@dataclass(frozen=True)
class CharacterTable:
    """Character values of the quarter-turn cyclic action on the sector."""

    n: int
    lam: int
    l: int
    values: tuple[complex, complex, complex, complex]

    def __post_init__(self):
        chi0, _, _, chi3 = self.values
        if abs(chi0 - 2 * self.l * abs(self.n)) > 1e-9:
            raise ValueError("chi(1) must equal the sector dimension")
        if abs(chi3 - np.conj(self.values[1])) > 1e-9:
            raise ValueError("chi(g^3) must conjugate chi(g)")


def character_table(n: int, lam: int, l: int) -> CharacterTable:
    _check_nl(n, lam, l)
    m = abs(n)
    chi0 = complex(2 * l * m)
    if n > 0:
        chi1 = np.exp(0.5j * math.pi * (n + lam)) * np.conj(gauss_sum(2 * l * n)) / math.sqrt(2 * l * n)
    else:
        chi1 = np.exp(0.5j * math.pi * (n + 3 * lam)) * gauss_sum(2 * l * m) / math.sqrt(2 * l * m)
    chi2 = complex(2 * (-1.0 if (n + lam) % 2 else 1.0))
    return CharacterTable(n, lam, l, (chi0, complex(chi1), chi2, complex(np.conj(chi1))))


def sector_dimensions(table: CharacterTable) -> tuple[int, int, int, int]:
    """Multiplicities of the four eigenvalues i^j of the cyclic action."""
    out = []
    for j in range(4):
        acc = sum((1j ** (-j * m)) * table.values[m] for m in range(4))
        val = acc / 4.0
        if abs(val.imag) > 1e-9 or abs(val.real - round(val.real)) > 1e-9:
            raise ValueError("character table produced a non-integer multiplicity")
        out.append(int(round(val.real)))
    return tuple(out)


def dim_from_characters(table: CharacterTable) -> int:
    """(1/4) sum of the table: multiplicity of eigenvalue +1."""
    return sector_dimensions(table)[0]


# ---------------------------------------------------------------------------
# coefficient constraints


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Coefficients c^{a,b} of an eigenfunction combination, a-major order."""

    n: int
    l: int
    entries: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (2 * self.l * abs(self.n),):
            raise ValueError("entry vector has the wrong length")


def _nullspace_basis(A: np.ndarray, n: int, l: int) -> list[CoefficientVector]:
    basis = null_space(A)
    return [CoefficientVector(n, l, basis[:, j].copy()) for j in range(basis.shape[1])]


def phi_constraint_solve(n: int, lam: int, l: int) -> list[CoefficientVector]:
    """Orthonormal solutions of the half-turn coefficient relations.

    The relations pair (a, b) with its pullback target: e c^{a,b} = c^{a',b'}
    with e = (-1)^(n+lam); assembled directly as displayed, one row per pair.
    """
    _check_nl(n, lam, l)
    m = abs(n)
    two_l = 2 * l
    dim = m * two_l
    e = -1.0 if (n + lam) % 2 else 1.0
    rows = np.zeros((dim, dim), dtype=complex)
    for a in range(m):
        for b in range(two_l):
            a2, b2 = _phi_target(a, b, n, two_l)
            rows[a * two_l + b, a * two_l + b] += e
            rows[a * two_l + b, a2 * two_l + b2] -= 1.0
    return _nullspace_basis(rows, n, l)


def psi_constraint_solve(n: int, lam: int, l: int) -> list[CoefficientVector]:
    """Orthonormal solutions of the quarter-turn coefficient relations c = Mc."""
    _check_nl(n, lam, l)
    m = abs(n)
    two_l = 2 * l
    dim = m * two_l
    if n > 0:
        pref = np.exp(0.5j * math.pi * (n + lam)) / math.sqrt(two_l * n)
    else:
        pref = np.exp(0.5j * math.pi * (n + 3 * lam)) / math.sqrt(two_l * m)
    rows = np.eye(dim, dtype=complex)
    for jp in range(m):
        for up in range(two_l):
            xp = jp / m + up / (two_l * n)
            for j in range(m):
                for u in range(two_l):
                    x = j / m + u / (two_l * n)
                    rows[jp * two_l + up, j * two_l + u] -= pref * np.exp(
                        -4j * l * n * math.pi * xp * x)
    return _nullspace_basis(rows, n, l)


def eigenfunction_combination(coef: CoefficientVector, lam: int, lattice: LatticeSpec,
                              pt, tol: float = 1e-12) -> complex:
    """Evaluate sum_{a,b} c^{a,b} f^{a,b} at pt on the given quotient."""
    if lattice.covering_width != 2 * coef.l:
        raise ValueError("lattice covering width must equal 2l of the coefficients")
    two_l = 2 * coef.l
    total = 0j
    for a in range(abs(coef.n)):
        for b in range(two_l):
            c = coef.entries[a * two_l + b]
            if c == 0:
                continue
            total += c * wb_eigenfunction(WBIndex(coef.n, a, b, two_l), lam, lattice, pt, tol)
    return total
