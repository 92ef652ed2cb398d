"""Named self-check suites runnable from the CLI.

Each suite re-derives a slice of the library's guarantees from scratch and
raises VerificationError on the first violation.  Suites are independent, so
they run on a small thread pool; HEIS_SPECTRA_THREADS caps the pool size.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .group import (
    PolarizedPoint,
    gamma_pi,
    gamma_pi_half,
    lattice_contains,
    motion_apply,
    motion_compose,
    motion_power,
    phi_generator,
    polarized_mul,
    psi_generator,
    reduce_to_fundamental_domain,
    scaled_square,
    standard_rect,
    torsion_witness,
    translation_motion,
)
from .hermite import hermite_function, hermite_poly
from .invariants import (
    character_table,
    dim_from_characters,
    dim_phi_invariant,
    dim_psi_invariant,
    fixed_subspace_dim,
    gauss_sum,
    gauss_sum_direct,
    phi_pullback_matrix,
    psi_pullback_matrix,
    sector_dimensions,
)
from .spectrum import OscillatorOrigin, enumerate_spectrum
from .weil_brezin import WBIndex, schrodinger_act, weil_brezin_eval, wb_eigenfunction
from .weyl import counting_function, oscillator_pair_sums, parity_counts, weyl_constant


class VerificationError(RuntimeError):
    pass


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str


# test-harness hook: a nonzero value is added to every pullback matrix entry
# inside the pullback suite, which must then fail (negative control)
_pullback_perturbation = 0.0


def set_pullback_perturbation(eps: float) -> None:
    global _pullback_perturbation
    _pullback_perturbation = float(eps)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise VerificationError(msg)


def _suite_group() -> str:
    phi, psi = phi_generator(), psi_generator()
    center = PolarizedPoint(0.0, 0.0, 1.0)
    for name, m in (("phi^2", motion_power(phi, 2)), ("psi^4", motion_power(psi, 4))):
        _require(m.translation == center, f"{name} is not the unit central translation")
        _require(m.rotation.A == 1.0 and m.rotation.B == 0.0, f"{name} has a residual rotation")
    _require(motion_power(psi, 2).translation == motion_power(phi, 1).translation,
             "psi^2 does not reproduce phi")
    rng = np.random.default_rng(1001)
    for _ in range(20):
        a, b, c = (PolarizedPoint(*rng.uniform(-2, 2, size=3)) for _ in range(3))
        left = polarized_mul(polarized_mul(a, b), c)
        right = polarized_mul(a, polarized_mul(b, c))
        _require(max(abs(left.p - right.p), abs(left.q - right.q), abs(left.s - right.s)) < 1e-12,
                 "associativity failed")
    for spec in (gamma_pi(1), gamma_pi_half(1)):
        lat = spec.base_lattice
        sp, sq = lat.steps
        for _ in range(20):
            i, k, m = rng.integers(-4, 5, size=3)
            g = PolarizedPoint(i * sp, k * sq, float(m))
            w = torsion_witness(g, spec)
            _require(abs(w.s - round(w.s)) < 1e-9 and round(w.s) % 2 == 1,
                     "torsion witness is not an odd central translation")
        for _ in range(10):
            g = PolarizedPoint(*rng.uniform(-3, 3, size=3))
            g0, motion = reduce_to_fundamental_domain(spec, g)
            back = motion_apply(motion, g0)
            _require(max(abs(back.p - g.p), abs(back.q - g.q), abs(back.s - g.s)) < 1e-9,
                     "fundamental-domain reduction does not invert")
    return "identities, associativity, torsion, reduction"


def _suite_hermite() -> str:
    ys = np.linspace(-3.0, 3.0, 25)
    for lam in range(0, 12):
        coeffs = np.zeros(lam + 1)
        coeffs[lam] = 1.0
        ref = np.polynomial.hermite.hermval(ys, coeffs)
        _require(np.max(np.abs(hermite_poly(lam, ys) - ref)) < 1e-8 * max(1.0, np.max(np.abs(ref))),
                 f"recurrence disagrees with the reference at order {lam}")
    h = 1e-3
    for lam in (0, 3, 6):
        for y in (-1.3, 0.4, 2.1):
            second = (hermite_function(lam, y + h) - 2 * hermite_function(lam, y)
                      + hermite_function(lam, y - h)) / h**2
            resid = abs(-second + y * y * hermite_function(lam, y)
                        - (2 * lam + 1) * hermite_function(lam, y))
            scale = max(1.0, (2 * lam + 1) * abs(hermite_function(lam, y)))
            _require(resid / scale < 1e-4,
                     f"oscillator equation residual {resid:.2e} at order {lam}")
    return "recurrence and oscillator equation"


def _suite_weil_brezin() -> str:
    origin = PolarizedPoint(0.0, 0.0, 0.0)
    idx = WBIndex(1, 0, 0, 1)
    val = wb_eigenfunction(idx, 0, standard_rect(1), origin)
    _require(abs(val - 1.08643481121330801) < 1e-12, "theta value at the origin drifted")
    rng = np.random.default_rng(1003)
    for lattice in (standard_rect(1), standard_rect(2), scaled_square(1)):
        width = lattice.covering_width
        idx = WBIndex(1, 0, 0, width)
        sp, sq = lattice.steps
        for _ in range(5):
            pt = PolarizedPoint(*rng.uniform(-1, 1, size=3))
            i, k, m = rng.integers(-2, 3, size=3)
            shift = polarized_mul(PolarizedPoint(i * sp, k * sq, float(m)), pt)
            a = wb_eigenfunction(idx, 1, lattice, shift)
            b = wb_eigenfunction(idx, 1, lattice, pt)
            _require(abs(a - b) < 1e-8, "lattice invariance failed")
    seed = lambda x: math.exp(-math.pi * (x - 0.2) ** 2)
    for n in (1, -2):
        idx = WBIndex(n, 0, 0, 2)
        for _ in range(5):
            pt = PolarizedPoint(*rng.uniform(-1, 1, size=3))
            h = PolarizedPoint(*rng.uniform(-1, 1, size=3))
            lhs = weil_brezin_eval(idx, seed, polarized_mul(pt, h))
            rhs = weil_brezin_eval(idx, lambda x: schrodinger_act(n, h, seed, x), pt)
            _require(abs(lhs - rhs) < 1e-8, "intertwining relation failed")
    return "theta value, invariance, intertwining"


def _pullback_cases():
    return [
        (phi_generator(), phi_pullback_matrix, lambda l: standard_rect(2 * l),
         [(1, 0, 1), (2, 1, 1), (-2, 0, 1)]),
        (psi_generator(), psi_pullback_matrix, lambda l: scaled_square(l),
         [(1, 1, 1), (2, 0, 1), (-1, 0, 1)]),
    ]


def _suite_pullback() -> str:
    rng = np.random.default_rng(1004)
    checked = 0
    for gen, builder, lattice_of, cases in _pullback_cases():
        for n, lam, l in cases:
            M = builder(n, lam, l).matrix + _pullback_perturbation
            lattice = lattice_of(l)
            idxs = [WBIndex(n, a, b, 2 * l) for a in range(abs(n)) for b in range(2 * l)]
            for _ in range(4):
                pt = PolarizedPoint(*rng.uniform(-1, 1, size=3))
                f_pt = np.array([wb_eigenfunction(i, lam, lattice, pt) for i in idxs])
                f_gen = np.array([wb_eigenfunction(i, lam, lattice, motion_apply(gen, pt))
                                  for i in idxs])
                err = np.max(np.abs(f_gen - M.T @ f_pt))
                _require(err < 1e-7, f"pullback matrix mismatch {err:.2e} at (n={n}, lam={lam})")
                checked += 1
    return f"{checked} pointwise matrix checks"


def _suite_dims() -> str:
    for l in (1, 2):
        for n in range(-4, 5):
            if n == 0:
                continue
            for lam in range(0, 5):
                _require(fixed_subspace_dim(phi_pullback_matrix(n, lam, l))
                         == dim_phi_invariant(n, lam, l), f"phi dim mismatch at ({n}, {lam}, {l})")
                _require(fixed_subspace_dim(psi_pullback_matrix(n, lam, l))
                         == dim_psi_invariant(n, lam, l), f"psi dim mismatch at ({n}, {lam}, {l})")
    return "closed forms equal rank oracles on the sweep"


def _suite_characters() -> str:
    for l in (1, 2):
        for n in (-3, -1, 1, 2, 3):
            for lam in range(0, 4):
                table = character_table(n, lam, l)
                M = psi_pullback_matrix(n, lam, l).matrix
                power = np.eye(M.shape[0], dtype=complex)
                for m, chi in enumerate(table.values):
                    if m:
                        power = power @ M
                    _require(abs(np.trace(power) - chi) < 1e-9,
                             f"character value disagrees with the trace at power {m}")
                _require(dim_from_characters(table) == dim_psi_invariant(n, lam, l),
                         "character average disagrees with the closed form")
                _require(sum(sector_dimensions(table)) == 2 * l * abs(n),
                         "sector dimensions do not resolve the space")
    return "traces, averages, sector sums"


def _suite_gauss() -> str:
    for m in range(1, 101):
        _require(abs(gauss_sum(m) - gauss_sum_direct(m)) < 1e-9,
                 f"Gauss sum closed form fails at m={m}")
    for l in (1, 2, 3):
        for n in (-3, -2, -1, 1, 2, 3):
            _require(2 * l * abs(n) % 4 in (0, 2), "reachable modulus is odd")
    return "closed form vs direct sums, reachable moduli"


def _suite_spectrum() -> str:
    for lattice, alpha in ((standard_rect(1), 0.0), (standard_rect(2), 0.4), (scaled_square(1), 0.0)):
        lines = enumerate_spectrum(lattice, alpha, 15.0)
        values = [ln.value for ln in lines]
        _require(values == sorted(values), "spectrum is not sorted")
        _require(all(ln.multiplicity >= 1 for ln in lines), "empty spectral line")
        for ln in lines:
            if isinstance(ln.origin, OscillatorOrigin):
                n, lam = ln.origin.n, ln.origin.lam
                sgn = 1.0 if n > 0 else -1.0
                expect = (math.pi * abs(n) / 2.0) * (2 * lam + 1 - alpha * sgn)
                _require(abs(ln.value - expect) < 1e-12, "oscillator value mismatch")
                _require(ln.multiplicity == lattice.covering_width * abs(n),
                         "oscillator multiplicity mismatch")
    return "ordering, values, multiplicities"


def _suite_weyl() -> str:
    _require(abs(weyl_constant(0.0).value - 0.5) < 1e-8, "A_0 is off")
    for a in (1.0, -1.0):
        _require(abs(weyl_constant(a).value - 1.0 / 6.0) < 1e-8, "endpoint constant is off")
    for a in (0.3, 0.7):
        _require(abs(weyl_constant(a).value - weyl_constant(-a).value) < 1e-10,
                 "constant is not even in alpha")
    _require(oscillator_pair_sums(math.pi, 0.0, 1) == (4, 12), "pair sums changed")
    for t in (30.0, 90.0):
        n_half = counting_function(gamma_pi(1), 0.0, [t]).oscillator[0]
        n_cover = counting_function(standard_rect(2), 0.0, [t]).oscillator[0]
        pc = parity_counts(t, 0.0)
        _require(abs(2 * n_half - n_cover) == 2 * abs(pc.even_count - pc.odd_count),
                 "half-count relation failed")
    return "constants, pair sums, half-count relation"


SUITES = {
    "group": _suite_group,
    "hermite": _suite_hermite,
    "weil-brezin": _suite_weil_brezin,
    "pullback": _suite_pullback,
    "dims": _suite_dims,
    "characters": _suite_characters,
    "gauss": _suite_gauss,
    "spectrum": _suite_spectrum,
    "weyl": _suite_weyl,
}


def available_suites() -> list[str]:
    return list(SUITES)


def thread_cap(default: int = 4) -> int:
    raw = os.environ.get("HEIS_SPECTRA_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return max(1, default)


def run_suites(names=None, max_workers: int | None = None) -> list[SuiteResult]:
    """Run the requested suites (all by default) and report in input order."""
    names = list(names) if names is not None else available_suites()
    unknown = sorted(set(names) - set(SUITES))
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    if max_workers is None:
        max_workers = min(thread_cap(), max(1, len(names)))

    def run_one(name: str) -> SuiteResult:
        try:
            return SuiteResult(name, True, SUITES[name]())
        except Exception as exc:
            return SuiteResult(name, False, f"{type(exc).__name__}: {exc}")

    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(run_one, names))
