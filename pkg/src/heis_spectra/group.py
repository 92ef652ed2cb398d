"""Polarized Heisenberg group, its rotations, and the discrete subgroups.

Points carry polarized coordinates (p, q, s) with product

    (p, q, s) * (p', q', s') = (p + p', q + q', s + s' + p q'),

together with the standard-coordinate picture (x, y, t) where the center is
scaled by 4 and the two pictures are identified by (x, y, t) |-> (y, x, t/4 + xy/2).

Rigid motions combine a left translation with a rotation fixing the center;
the two torsion-free crystallographic groups used downstream are generated by
a lattice together with the half-turn ``phi`` or the quarter-turn ``psi``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_FINITE_MSG = "coordinates must be finite"


@dataclass(frozen=True)
class PolarizedPoint:
    p: float
    q: float
    s: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and math.isfinite(self.q) and math.isfinite(self.s)):
            raise ValueError(_FINITE_MSG)


@dataclass(frozen=True)
class StandardPoint:
    x: float
    y: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.t)):
            raise ValueError(_FINITE_MSG)


def polarized_identity() -> PolarizedPoint:
    return PolarizedPoint(0.0, 0.0, 0.0)


def polarized_mul(g: PolarizedPoint, h: PolarizedPoint) -> PolarizedPoint:
    return PolarizedPoint(g.p + h.p, g.q + h.q, g.s + h.s + g.p * h.q)


def polarized_inverse(g: PolarizedPoint) -> PolarizedPoint:
    return PolarizedPoint(-g.p, -g.q, -g.s + g.p * g.q)


def standard_mul(g: StandardPoint, h: StandardPoint) -> StandardPoint:
    # Im(z zbar') = y x' - x y' for z = x + iy, z' = x' + iy'
    return StandardPoint(g.x + h.x, g.y + h.y, g.t + h.t + 2.0 * (g.y * h.x - g.x * h.y))


def standard_inverse(g: StandardPoint) -> StandardPoint:
    return StandardPoint(-g.x, -g.y, -g.t)


def standard_to_polarized(g: StandardPoint) -> PolarizedPoint:
    """Group isomorphism from the standard picture onto the polarized one."""
    return PolarizedPoint(g.y, g.x, g.t / 4.0 + g.x * g.y / 2.0)


@dataclass(frozen=True)
class UnitaryAutomorphism:
    """Rotation (p, q) |-> (Ap - Bq, Bp + Aq) lifted to a group automorphism.

    Requires A^2 + B^2 = 1; the s-component picks up the quadratic correction
    (AB(p^2 - q^2) + (A^2 - B^2 - 1) p q) / 2 that makes the map multiplicative.
    """

    A: float
    B: float

    def __post_init__(self):
        if not (math.isfinite(self.A) and math.isfinite(self.B)):
            raise ValueError(_FINITE_MSG)
        if abs(self.A * self.A + self.B * self.B - 1.0) > 1e-12:
            raise ValueError("A^2 + B^2 must equal 1")


def identity_rotation() -> UnitaryAutomorphism:
    return UnitaryAutomorphism(1.0, 0.0)


def apply_unitary(u: UnitaryAutomorphism, g: PolarizedPoint) -> PolarizedPoint:
    a, b = u.A, u.B
    p, q = g.p, g.q
    s = g.s + 0.5 * (a * b * (p * p - q * q) + (a * a - b * b - 1.0) * p * q)
    return PolarizedPoint(a * p - b * q, b * p + a * q, s)


def unitary_compose(u: UnitaryAutomorphism, v: UnitaryAutomorphism) -> UnitaryAutomorphism:
    # same law as multiplying A + iB
    return UnitaryAutomorphism(u.A * v.A - u.B * v.B, u.A * v.B + u.B * v.A)


def unitary_inverse(u: UnitaryAutomorphism) -> UnitaryAutomorphism:
    return UnitaryAutomorphism(u.A, -u.B)


@dataclass(frozen=True)
class SymplecticMap:
    """Determinant-one map of the (p, q) plane lifted to the group.

    (p, q, s) |-> (Cq + Dp, Aq + Bp, s + ((Aq + Bp)(Cq + Dp) - pq) / 2).
    """

    A: float
    B: float
    C: float
    D: float

    def __post_init__(self):
        if abs(self.A * self.D - self.B * self.C - 1.0) > 1e-12:
            raise ValueError("AD - BC must equal 1")


def apply_symplectic(m: SymplecticMap, g: PolarizedPoint) -> PolarizedPoint:
    p_new = m.C * g.q + m.D * g.p
    q_new = m.A * g.q + m.B * g.p
    return PolarizedPoint(p_new, q_new, g.s + 0.5 * (q_new * p_new - g.p * g.q))


def scaling_map(l: int) -> SymplecticMap:
    """The rescaling (p, q, s) |-> (p / sqrt(2l), sqrt(2l) q, s).

    Carries the square lattice of width sqrt(2l) onto the rectangular lattice
    Z x 2lZ x Z, so square-lattice quotients can reuse rectangular machinery.
    """
    w = math.sqrt(2.0 * l)
    return SymplecticMap(A=w, B=0.0, C=0.0, D=1.0 / w)


@dataclass(frozen=True)
class RigidMotion:
    """Left translation composed with a central-axis rotation: g |-> t * U(g)."""

    translation: PolarizedPoint
    rotation: UnitaryAutomorphism


def identity_motion() -> RigidMotion:
    return RigidMotion(polarized_identity(), identity_rotation())


def translation_motion(g: PolarizedPoint) -> RigidMotion:
    return RigidMotion(g, identity_rotation())


def motion_apply(m: RigidMotion, g: PolarizedPoint) -> PolarizedPoint:
    return polarized_mul(m.translation, apply_unitary(m.rotation, g))


def motion_compose(m1: RigidMotion, m2: RigidMotion) -> RigidMotion:
    # (t1, U1)(t2, U2) = (t1 * U1(t2), U1 U2)
    return RigidMotion(
        polarized_mul(m1.translation, apply_unitary(m1.rotation, m2.translation)),
        unitary_compose(m1.rotation, m2.rotation),
    )


def motion_inverse(m: RigidMotion) -> RigidMotion:
    u_inv = unitary_inverse(m.rotation)
    return RigidMotion(apply_unitary(u_inv, polarized_inverse(m.translation)), u_inv)


def motion_power(m: RigidMotion, k: int) -> RigidMotion:
    if k < 0:
        return motion_power(motion_inverse(m), -k)
    out = identity_motion()
    for _ in range(k):
        out = motion_compose(out, m)
    return out


def phi_generator() -> RigidMotion:
    """Half-turn with central offset 1/2; squares to the translation (0, 0, 1)."""
    return RigidMotion(PolarizedPoint(0.0, 0.0, 0.5), UnitaryAutomorphism(-1.0, 0.0))


def psi_generator() -> RigidMotion:
    """Quarter-turn with central offset 1/4; its square is the half-turn motion."""
    return RigidMotion(PolarizedPoint(0.0, 0.0, 0.25), UnitaryAutomorphism(0.0, 1.0))


# ---------------------------------------------------------------------------
# discrete subgroups


@dataclass(frozen=True)
class LatticeSpec:
    """Discrete subgroup of translations.

    kind "standard-rect": Z x lZ x Z.
    kind "scaled-square": sqrt(2l)Z x sqrt(2l)Z x Z.
    """

    kind: str
    l: int

    def __post_init__(self):
        if self.kind not in ("standard-rect", "scaled-square"):
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError("l must be a positive integer")

    @property
    def steps(self) -> tuple[float, float]:
        """Generator step sizes along p and q."""
        if self.kind == "standard-rect":
            return 1.0, float(self.l)
        w = math.sqrt(2.0 * self.l)
        return w, w

    @property
    def covering_width(self) -> int:
        """Width L of the rectangular lattice Z x LZ x Z this quotient indexes by.

        The square lattice is carried onto Z x 2lZ x Z by ``scaling_map``, so its
        eigenfunction bookkeeping uses width 2l.
        """
        return self.l if self.kind == "standard-rect" else 2 * self.l


def standard_rect(l: int) -> LatticeSpec:
    return LatticeSpec("standard-rect", l)


def scaled_square(l: int) -> LatticeSpec:
    return LatticeSpec("scaled-square", l)


@dataclass(frozen=True)
class BieberbachSpec:
    """Torsion-free crystallographic group: a lattice extended by phi or psi.

    kind "gamma-pi":      Z x 2lZ x Z extended by the half-turn, index 2.
    kind "gamma-pi-half": sqrt(2l)Z x sqrt(2l)Z x Z extended by the quarter-turn,
                          index 4.
    """

    kind: str
    l: int

    def __post_init__(self):
        if self.kind not in ("gamma-pi", "gamma-pi-half"):
            raise ValueError(f"unknown quotient kind {self.kind!r}")
        if not isinstance(self.l, int) or self.l < 1:
            raise ValueError("l must be a positive integer")

    @property
    def base_lattice(self) -> LatticeSpec:
        if self.kind == "gamma-pi":
            return standard_rect(2 * self.l)
        return scaled_square(self.l)

    @property
    def generator(self) -> RigidMotion:
        return phi_generator() if self.kind == "gamma-pi" else psi_generator()

    @property
    def index(self) -> int:
        return 2 if self.kind == "gamma-pi" else 4


def gamma_pi(l: int) -> BieberbachSpec:
    return BieberbachSpec("gamma-pi", l)


def gamma_pi_half(l: int) -> BieberbachSpec:
    return BieberbachSpec("gamma-pi-half", l)


def lattice_contains(spec: LatticeSpec, g: PolarizedPoint, tol: float = 1e-9) -> bool:
    """Whether g lies in the lattice, testing each coordinate within tol."""
    sp, sq = spec.steps
    return (
        abs(g.p - sp * round(g.p / sp)) <= tol
        and abs(g.q - sq * round(g.q / sq)) <= tol
        and abs(g.s - round(g.s)) <= tol
    )


def _box_reduce(spec: LatticeSpec, g: PolarizedPoint):
    """Write g = nu * g0 with nu in the lattice and (p0, q0) in the base box.

    The s coordinate of the quotient representative shifts by xi*q0 under the
    left translation, so it is normalized after the horizontal reduction.
    """
    sp, sq = spec.steps
    xi = sp * math.floor(g.p / sp)
    eta = sq * math.floor(g.q / sq)
    p0 = g.p - xi
    q0 = g.q - eta
    s_shift = g.s - xi * q0
    return xi, eta, p0, q0, s_shift


def reduce_to_fundamental_domain(spec, g: PolarizedPoint):
    """Reduce g into a fundamental domain of the given discrete group.

    Returns ``(g0, motion)`` with ``motion_apply(motion, g0) == g`` and motion in
    the group. For a plain lattice the domain is the coordinate box; for the
    extended groups the coset representative is chosen first and the lattice
    reduction applied inside it.
    """
    if isinstance(spec, LatticeSpec):
        xi, eta, p0, q0, s_shift = _box_reduce(spec, g)
        m = math.floor(s_shift)
        g0 = PolarizedPoint(p0, q0, s_shift - m)
        return g0, translation_motion(PolarizedPoint(xi, eta, float(m)))
    if not isinstance(spec, BieberbachSpec):
        raise TypeError("spec must be a LatticeSpec or BieberbachSpec")

    base = spec.base_lattice
    gen = spec.generator
    if spec.kind == "gamma-pi":
        # domain: 0 <= p < 1, 0 <= q < 2l, q/2 <= s < (q+1)/2; exactly one of
        # the two coset candidates lands there (up to the boundary)
        best = None
        for k in (0, 1):
            h = motion_apply(motion_power(gen, -k), g)
            xi, eta, p0, q0, s_shift = _box_reduce(base, h)
            w = s_shift - 0.5 * q0
            frac = w - math.floor(w)
            cand = (frac, k, xi, eta, p0, q0, s_shift)
            if frac < 0.5:
                best = cand
                break
            if best is None or frac < best[0]:
                best = cand
        _, k, xi, eta, p0, q0, s_shift = best
        m = math.floor(s_shift - 0.5 * q0)
        g0 = PolarizedPoint(p0, q0, s_shift - m)
        nu = PolarizedPoint(xi, eta, float(m))
        motion = motion_compose(motion_power(gen, k), translation_motion(nu))
        return g0, motion

    # quarter-turn quotient: box-reduce all four coset candidates and keep the
    # lexicographically smallest triple (ties broken toward smaller k)
    candidates = []
    for k in range(4):
        h = motion_apply(motion_power(gen, -k), g)
        xi, eta, p0, q0, s_shift = _box_reduce(base, h)
        m = math.floor(s_shift)
        candidates.append(((p0, q0, s_shift - m), k, PolarizedPoint(xi, eta, float(m))))

    def _lex_less(a, b, tol=1e-12):
        for u, v in zip(a, b):
            if u < v - tol:
                return True
            if u > v + tol:
                return False
        return False

    best_trip, best_k, best_nu = candidates[0]
    for trip, k, nu in candidates[1:]:
        if _lex_less(trip, best_trip):
            best_trip, best_k, best_nu = trip, k, nu
    g0 = PolarizedPoint(*best_trip)
    motion = motion_compose(motion_power(gen, best_k), translation_motion(best_nu))
    return g0, motion


def torsion_witness(g: PolarizedPoint, spec: BieberbachSpec, tol: float = 1e-9) -> PolarizedPoint:
    """Central translation certifying that g * generator has no torsion.

    For a lattice element g, (g * generator)^index is a pure central translation
    (0, 0, k) with k a nonzero integer; the witness point is returned."""
    if not lattice_contains(spec.base_lattice, g, tol):
        raise ValueError("g is not an element of the base lattice")
    gamma = motion_compose(translation_motion(g), spec.generator)
    power = motion_power(gamma, spec.index)
    rot = power.rotation
    if abs(rot.A - 1.0) > tol or abs(rot.B) > tol:
        raise AssertionError("power of the motion failed to be a translation")
    w = power.translation
    if abs(w.p) > tol or abs(w.q) > tol:
        raise AssertionError("power of the motion failed to be central")
    return w
