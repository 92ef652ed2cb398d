import math

import numpy as np
import pytest

from heis_spectra.group import PolarizedPoint, scaled_square, standard_rect
from heis_spectra.spectrum import (
    DualLatticePoint,
    OscillatorOrigin,
    TorusOrigin,
    dual_lattice,
    enumerate_spectrum,
    oscillator_eigenvalue,
    torus_character,
)


def test_dual_generators():
    g1, g2 = dual_lattice(standard_rect(1))
    assert (g1.mu, g1.nu) == (1.0, 0.0) and (g2.mu, g2.nu) == (0.0, 1.0)
    g1, g2 = dual_lattice(standard_rect(2))
    assert (g2.mu, g2.nu) == (0.0, 0.5)
    g1, g2 = dual_lattice(scaled_square(1))
    assert abs(g1.mu - 1 / math.sqrt(2)) < 1e-15 and abs(g2.nu - 1 / math.sqrt(2)) < 1e-15


@pytest.mark.parametrize("lattice", [standard_rect(1), standard_rect(3), scaled_square(2)])
def test_dual_pairing_integrality(lattice):
    # mu*u + nu*v in Z for the projected lattice generators (u,v)
    sp, sq = lattice.steps
    lat_gens = [(sp, 0.0), (0.0, sq)]
    for d in dual_lattice(lattice):
        for u, v in lat_gens:
            pairing = d.mu * u + d.nu * v
            assert abs(pairing - round(pairing)) < 1e-10


def test_character_values():
    assert torus_character(DualLatticePoint(0, 0), PolarizedPoint(3, -2, 7)) == 1.0
    val = torus_character(DualLatticePoint(1, 0), PolarizedPoint(0.5, 1.7, -4.0))
    assert abs(val + 1.0) < 1e-14
    val = torus_character(DualLatticePoint(1, 1), PolarizedPoint(0.25, 0.25, 0.0))
    assert abs(val + 1.0) < 1e-14


def test_oscillator_eigenvalue_formula():
    assert abs(oscillator_eigenvalue(1, 0, 0.0) - math.pi / 2) < 1e-15
    assert abs(oscillator_eigenvalue(-2, 1, 0.5) - math.pi * (3 + 0.5) / 1) < 1e-12
    # the alpha = 1 kernel line sits at exactly zero
    assert oscillator_eigenvalue(1, 0, 1.0) == 0.0
    with pytest.raises(ValueError):
        oscillator_eigenvalue(0, 0, 0.0)


def test_small_spectrum_rect1():
    lines = enumerate_spectrum(standard_rect(1), 0.0, math.pi)
    torus = [ln for ln in lines if isinstance(ln.origin, TorusOrigin)]
    osc = [ln for ln in lines if isinstance(ln.origin, OscillatorOrigin)]
    assert len(torus) == 1 and torus[0].value == 0.0 and torus[0].multiplicity == 1
    got = sorted((round(ln.value, 12), ln.origin.n, ln.origin.lam, ln.multiplicity) for ln in osc)
    want = sorted([
        (round(math.pi / 2, 12), 1, 0, 1),
        (round(math.pi / 2, 12), -1, 0, 1),
        (round(math.pi, 12), 2, 0, 2),
        (round(math.pi, 12), -2, 0, 2),
    ])
    assert got == want


def test_spectrum_sorted_and_deterministic():
    a = enumerate_spectrum(standard_rect(2), 0.3, 40.0)
    b = enumerate_spectrum(standard_rect(2), 0.3, 40.0)
    assert a == b
    values = [ln.value for ln in a]
    assert values == sorted(values)


def test_zero_value_oscillator_lines_excluded():
    lines = enumerate_spectrum(standard_rect(1), 1.0, 10.0)
    for ln in lines:
        if isinstance(ln.origin, OscillatorOrigin):
            assert ln.value > 0
    # (n=1, lam=1) at alpha=1 sits at pi and must be present
    assert any(isinstance(ln.origin, OscillatorOrigin) and ln.origin.n == 1 and ln.origin.lam == 1
               and abs(ln.value - math.pi) < 1e-12 for ln in lines)


def test_torus_grouping_multiplicity():
    # mu^2 + nu^2 = 50 has 12 integer representations
    t = math.pi**2 * 50 + 1.0
    lines = enumerate_spectrum(standard_rect(1), 0.0, t)
    tgt = [ln for ln in lines if isinstance(ln.origin, TorusOrigin)
           and abs(ln.value - math.pi**2 * 50) < 1e-9]
    assert len(tgt) == 1
    assert tgt[0].multiplicity == 12
    pts = {(p.mu, p.nu) for p in tgt[0].origin.points}
    assert (5.0, 5.0) in pts and (-1.0, -7.0) in pts


def test_completeness_small_scale():
    # independent brute-force double loop, no grouping
    tmax = 20.0
    alpha = 0.0
    total = 0
    for i in range(-10, 11):
        for k in range(-10, 11):
            if math.pi**2 * (i * i + k * k) <= tmax:
                total += 1
    for n in range(-20, 21):
        if n == 0:
            continue
        for lam in range(0, 20):
            v = oscillator_eigenvalue(n, lam, alpha)
            if 0 < v <= tmax:
                total += abs(n)
    lines = enumerate_spectrum(standard_rect(1), alpha, tmax)
    assert sum(ln.multiplicity for ln in lines) == total


def test_tmax_validation():
    with pytest.raises(ValueError):
        enumerate_spectrum(standard_rect(1), 0.0, 0.0)
    with pytest.raises(ValueError):
        enumerate_spectrum(standard_rect(1), 0.0, -3.0)


def test_square_lattice_multiplicities_use_covering_width():
    lines = enumerate_spectrum(scaled_square(1), 0.0, math.pi + 0.01)
    osc = [ln for ln in lines if isinstance(ln.origin, OscillatorOrigin)]
    for ln in osc:
        assert ln.multiplicity == 2 * abs(ln.origin.n)
