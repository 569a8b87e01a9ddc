"""Spin tomograms, measurement-frame unitaries, and unitary-mixture channels.

A unitary rotation of the measurement frame acts on probability triples as an
affine map p' = L p + C with orthogonal L; convex mixtures of unitaries give
contractive affine maps, which is the whole channel picture in these
coordinates. Affine maps are always constructed from four probe states via
the matrix route, and the closed-form component expressions are validated
against that construction rather than trusted.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import matrix_oracle, qubit_core
from .diagnostics import FormulaCheck
from .errors import DomainError, FormulaMismatchWarning
from .qubit_core import BALL_CENTER, GAMMA, ProbTriple

TWO_PI = 2.0 * np.pi
ROTATION_FORMULA_TOL = 1e-9
WEIGHT_TOL = 1e-12
DIRECTION_NORM_TOL = 1e-10


@dataclass(frozen=True)
class Direction:
    """Measurement direction given by Euler angles, in radians.

    theta must lie in [0, pi], phi and psi in [0, 2*pi); out-of-range values
    are rejected rather than wrapped. The unit vector ignores psi, which only
    rotates the frame about the direction itself.
    """

    theta: float
    phi: float
    psi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= np.pi:
            raise DomainError(f"theta = {self.theta!r} outside [0, pi]")
        if not 0.0 <= self.phi < TWO_PI:
            raise DomainError(f"phi = {self.phi!r} outside [0, 2*pi)")
        if not 0.0 <= self.psi < TWO_PI:
            raise DomainError(f"psi = {self.psi!r} outside [0, 2*pi)")

    def unit_vector(self) -> np.ndarray:
        s = np.sin(self.theta)
        return np.array([s * np.cos(self.phi), s * np.sin(self.phi), np.cos(self.theta)])


def direction_vector(direction) -> np.ndarray:
    """Unit vector of a Direction, or a raw length-3 unit vector passed through."""
    if isinstance(direction, Direction):
        return direction.unit_vector()
    v = np.asarray(direction, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"direction must be a Direction or a length-3 vector, got shape {v.shape}")
    norm = float(np.linalg.norm(v))
    if abs(norm - 1.0) > DIRECTION_NORM_TOL:
        raise DomainError(f"direction vector must have unit length, got |n| = {norm!r}")
    return v


def euler_unitary(direction: Direction) -> np.ndarray:
    """Measurement-frame rotation for the given Euler angles (determinant one).

    Composed as exp(i psi sigma_z/2) exp(i theta sigma_y/2) exp(i phi sigma_z/2),
    with the azimuth phi innermost: the diagonal of u rho u^dagger then gives
    the tomogram along the direction's unit vector for every psi.
    """
    half = 0.5 * direction.theta
    c, s = np.cos(half), np.sin(half)
    e_plus = np.exp(0.5j * (direction.psi + direction.phi))
    e_minus = np.exp(0.5j * (direction.psi - direction.phi))
    return np.array(
        [[c * e_plus, s * e_minus], [-s * np.conj(e_minus), c * np.conj(e_plus)]],
        dtype=complex,
    )


def state_tomogram(p: ProbTriple, direction, tol: float = qubit_core.DEFAULT_TOL) -> tuple[float, float]:
    """Probabilities of spin projection +1/2 and -1/2 along the direction.

    Equals the diagonal of u rho u^dagger for the matching frame unitary;
    the pair sums to one by construction.
    """
    qubit_core.require_physical(p, tol)
    w_plus = float((p.as_array() - BALL_CENTER) @ direction_vector(direction)) + 0.5
    return w_plus, 1.0 - w_plus


@dataclass(frozen=True)
class AffineMap3:
    """Affine action p -> L p + C on probability triples."""

    L: np.ndarray
    C: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "L", np.asarray(self.L, dtype=float).reshape(3, 3))
        object.__setattr__(self, "C", np.asarray(self.C, dtype=float).reshape(3))

    def apply(self, p: ProbTriple) -> ProbTriple:
        return ProbTriple.from_array(self.L @ p.as_array() + self.C)

    def then(self, other: "AffineMap3") -> "AffineMap3":
        """Map equivalent to applying self first, then other."""
        return AffineMap3(other.L @ self.L, other.L @ self.C + other.C)


def apply_affine(mapping: AffineMap3, p: ProbTriple) -> ProbTriple:
    """Evaluate L p + C. The caller is responsible for p being physical."""
    return mapping.apply(p)


# Four probe triples fixing any affine map in three dimensions: the ball
# center plus half-steps along each axis (all physical, the steps are pure).
_PROBE_TRIPLES = (
    ProbTriple(0.5, 0.5, 0.5),
    ProbTriple(1.0, 0.5, 0.5),
    ProbTriple(0.5, 1.0, 0.5),
    ProbTriple(0.5, 0.5, 1.0),
)


def _probe_image(u: np.ndarray, p: ProbTriple) -> np.ndarray:
    rho = qubit_core.density_from_probs(p)
    return qubit_core.probs_from_density(matrix_oracle.conjugate_by_unitary(rho, u)).as_array()


def _map_from_probes(u: np.ndarray) -> AffineMap3:
    base = _probe_image(u, _PROBE_TRIPLES[0])
    columns = [2.0 * (_probe_image(u, probe) - base) for probe in _PROBE_TRIPLES[1:]]
    L = np.column_stack(columns)
    return AffineMap3(L, base - L @ BALL_CENTER)


def _closed_form_components(u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    u11, u12, u21, u22 = u[0, 0], u[0, 1], u[1, 0], u[1, 1]
    gbar = np.conj(GAMMA)
    L = np.array([
        [
            (u12 * np.conj(u21)).real + (u11 * np.conj(u22)).real,
            (1j * u12 * np.conj(u21)).real - (1j * u11 * np.conj(u22)).real,
            (u11 * np.conj(u21)).real - (u12 * np.conj(u22)).real,
        ],
        [
            -(u12 * np.conj(u21)).imag - (u11 * np.conj(u22)).imag,
            (1j * u11 * np.conj(u22)).imag - (1j * u12 * np.conj(u21)).imag,
            (u12 * np.conj(u22)).imag - (u11 * np.conj(u21)).imag,
        ],
        [
            (u12 * np.conj(u11) + u11 * np.conj(u12)).real,
            (1j * (u12 * np.conj(u11) - u11 * np.conj(u12))).real,
            abs(u11) ** 2 - abs(u12) ** 2,
        ],
    ])
    C = np.array([
        (-GAMMA * u12 * np.conj(u21) - gbar * u11 * np.conj(u22) + u12 * np.conj(u22) + gbar).real,
        (GAMMA * u12 * np.conj(u21) + gbar * u11 * np.conj(u22) - u12 * np.conj(u22) - gbar).imag,
        (-GAMMA * u12 * np.conj(u11) - gbar * u11 * np.conj(u12) + abs(u12) ** 2).real,
    ])
    return L, C


def _formula_checks(u: np.ndarray, probe_map: AffineMap3, tol: float) -> list[FormulaCheck]:
    closed_L, closed_C = _closed_form_components(u)
    checks = []
    for i in range(3):
        for j in range(3):
            checks.append(FormulaCheck(f"L{i + 1}{j + 1}", float(closed_L[i, j]), float(probe_map.L[i, j]), tol))
    for i in range(3):
        checks.append(FormulaCheck(f"C{i + 1}", float(closed_C[i]), float(probe_map.C[i]), tol))
    return checks


def rotation_formula_checks(u, tol: float = ROTATION_FORMULA_TOL) -> list[FormulaCheck]:
    """Compare every closed-form (L, C) component against the probe construction."""
    w = matrix_oracle.require_unitary(u)
    return _formula_checks(w, _map_from_probes(w), tol)


def rotation_from_unitary(u, formula_tol: float = ROTATION_FORMULA_TOL) -> AffineMap3:
    """Affine action of conjugation by a single unitary on probability triples.

    The map is built from four probe states through the matrix route. The
    closed-form component expressions are then evaluated against it; any
    component deviating beyond formula_tol raises a FormulaMismatchWarning,
    and the probe-built map is returned either way (it is authoritative).
    """
    w = matrix_oracle.require_unitary(u)
    result = _map_from_probes(w)
    bad = [c for c in _formula_checks(w, result, formula_tol) if not c.ok]
    if bad:
        details = ", ".join(f"{c.name} off by {c.deviation:.3e}" for c in bad)
        warnings.warn(
            f"closed-form rotation components disagree with the probe construction: {details}",
            FormulaMismatchWarning,
            stacklevel=2,
        )
    return result


@dataclass(frozen=True)
class ChannelSpec:
    """Convex mixture of unitary conjugations as (weight, unitary) pairs."""

    terms: tuple[tuple[float, np.ndarray], ...]

    def __post_init__(self):
        if len(self.terms) == 0:
            raise DomainError("a channel needs at least one (weight, unitary) term")
        cleaned = []
        total = 0.0
        for k, (weight, u) in enumerate(self.terms):
            w = float(weight)
            if w < -WEIGHT_TOL:
                raise DomainError(f"channel weight {k} is negative ({w!r})")
            cleaned.append((w, matrix_oracle.require_unitary(u, name=f"channel unitary {k}")))
            total += w
        if abs(total - 1.0) > WEIGHT_TOL:
            raise DomainError(f"channel weights must sum to 1, got {total!r}")
        object.__setattr__(self, "terms", tuple(cleaned))


def channel_map(spec: ChannelSpec, formula_tol: float = ROTATION_FORMULA_TOL) -> AffineMap3:
    """Weighted sum of the per-unitary affine maps; a contraction on the ball."""
    L = np.zeros((3, 3))
    C = np.zeros(3)
    for weight, u in spec.terms:
        part = rotation_from_unitary(u, formula_tol)
        L += weight * part.L
        C += weight * part.C
    return AffineMap3(L, C)
