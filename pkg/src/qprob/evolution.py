"""Heisenberg-picture evolution as a linear kinetic equation for triples.

For a Hamiltonian H, the probability triple of any rho(x, t) built from an
evolving observable obeys dp/dt = L p + C with a constant antisymmetric L, so
the exact propagator is a rotation plus a drift term, both evaluated in
closed form (no time stepping). Whenever a system is built, the closed-form
L and C are validated against central finite differences of the exact matrix
evolution; on disagreement the finite-difference fit takes over.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from . import matrix_oracle, observable_map, qubit_core
from .diagnostics import FormulaCheck
from .errors import DomainError, FormulaMismatchWarning
from .qubit_core import BALL_CENTER, DEFAULT_TOL, GAMMA, ProbTriple

FD_STEP = 1e-6
FD_TOL = 1e-4
TRAJECTORY_TOL = 1e-8
_VALIDATION_SEED = 20170831
_SMALL_ANGLE = 1e-4

_PROBE_TRIPLES = (
    ProbTriple(0.5, 0.5, 0.5),
    ProbTriple(1.0, 0.5, 0.5),
    ProbTriple(0.5, 1.0, 0.5),
    ProbTriple(0.5, 0.5, 1.0),
)


@dataclass(frozen=True)
class KineticSystem:
    """Constant-coefficient system dp/dt = L p + C for a fixed Hamiltonian and shift."""

    L: np.ndarray
    C: np.ndarray
    H: np.ndarray
    x: float

    def __post_init__(self):
        object.__setattr__(self, "L", np.asarray(self.L, dtype=float).reshape(3, 3))
        object.__setattr__(self, "C", np.asarray(self.C, dtype=float).reshape(3))
        object.__setattr__(self, "H", np.asarray(self.H, dtype=complex).reshape(2, 2))
        defect = float(np.max(np.abs(self.L + self.L.T)))
        if defect > 1e-12:
            raise DomainError(f"kinetic generator must be antisymmetric (defect {defect:.3e})")


@dataclass(frozen=True)
class Trajectory:
    """Sampled evolution: times, the matching triples, and the shift they belong to."""

    times: np.ndarray
    probs: np.ndarray
    x: float

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        probs = np.asarray(self.probs, dtype=float)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "probs", probs)
        if times.ndim != 1 or probs.shape != (times.size, 3):
            raise DomainError("trajectory needs times (n,) and probs (n, 3)")
        if times.size < 2 or np.any(np.diff(times) <= 0.0):
            raise DomainError("trajectory times must be strictly increasing")
        for row in probs:
            qubit_core.require_physical(ProbTriple.from_array(row), TRAJECTORY_TOL)

    def triples(self) -> list[ProbTriple]:
        return [ProbTriple.from_array(row) for row in self.probs]


def _closed_form_generator(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    h11 = float(m[0, 0].real)
    h22 = float(m[1, 1].real)
    re21 = float(m[1, 0].real)
    im21 = float(m[1, 0].imag)
    L = np.array([
        [0.0, h11 - h22, -2.0 * im21],
        [h22 - h11, 0.0, 2.0 * re21],
        [2.0 * im21, -2.0 * re21, 0.0],
    ])
    C = np.array([
        im21 + 0.5 * (h22 - h11),
        -re21 + 0.5 * (h11 - h22),
        2.0 * float((GAMMA * m[0, 1]).imag),
    ])
    return L, C


def _fd_derivative(m: np.ndarray, p: ProbTriple, dt: float = FD_STEP) -> np.ndarray:
    """Central finite difference of the triple under the exact matrix evolution."""
    rho = qubit_core.density_from_probs(p)
    ahead = qubit_core.probs_from_density(matrix_oracle.heisenberg_exact(rho, m, dt)).as_array()
    behind = qubit_core.probs_from_density(matrix_oracle.heisenberg_exact(rho, m, -dt)).as_array()
    return (ahead - behind) / (2.0 * dt)


def _fitted_generator(m: np.ndarray, dt: float = FD_STEP) -> tuple[np.ndarray, np.ndarray]:
    base = _fd_derivative(m, _PROBE_TRIPLES[0], dt)
    columns = [2.0 * (_fd_derivative(m, probe, dt) - base) for probe in _PROBE_TRIPLES[1:]]
    L = np.column_stack(columns)
    # the generator is provably antisymmetric; strip finite-difference dust
    L = 0.5 * (L - L.T)
    return L, base - L @ BALL_CENTER


def kinetic_formula_checks(h, tol: float = FD_TOL, dt: float = FD_STEP) -> list[FormulaCheck]:
    """Compare every closed-form generator component against the finite-difference fit."""
    m = matrix_oracle.require_hermitian(h, name="hamiltonian")
    L, C = _closed_form_generator(m)
    fit_L, fit_C = _fitted_generator(m, dt)
    checks = []
    for i in range(3):
        for j in range(3):
            checks.append(FormulaCheck(f"L{i + 1}{j + 1}", float(L[i, j]), float(fit_L[i, j]), tol))
    for i in range(3):
        checks.append(FormulaCheck(f"C{i + 1}", float(C[i]), float(fit_C[i]), tol))
    return checks


def build_kinetic(h, x: float, validate: bool = True, fd_tol: float = FD_TOL) -> KineticSystem:
    """Kinetic system dp/dt = L p + C for the given Hamiltonian and shift.

    L and C come from closed forms (L antisymmetric by construction). With
    validate=True the generator is checked against central finite differences
    of the exact matrix evolution at five seeded random physical triples; a
    residual beyond fd_tol raises a FormulaMismatchWarning and the
    finite-difference fit replaces the closed forms.
    """
    m = matrix_oracle.require_hermitian(h, name="hamiltonian")
    L, C = _closed_form_generator(m)
    if validate:
        rng = np.random.default_rng(_VALIDATION_SEED)
        worst = 0.0
        for _ in range(5):
            v = rng.normal(size=3)
            v *= 0.5 * rng.uniform() ** (1.0 / 3.0) / np.linalg.norm(v)
            p = ProbTriple.from_array(BALL_CENTER + v)
            residual = np.max(np.abs(_fd_derivative(m, p) - (L @ p.as_array() + C)))
            worst = max(worst, float(residual))
        if worst > fd_tol:
            warnings.warn(
                "closed-form kinetic generator disagrees with the finite-difference "
                f"oracle (worst residual {worst:.3e}); using the fitted generator",
                FormulaMismatchWarning,
                stacklevel=2,
            )
            L, C = _fitted_generator(m)
    return KineticSystem(L=L, C=C, H=m, x=float(x))


def _propagator(L: np.ndarray, t: float) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form (exp(L t), integral of exp(L s) ds from 0 to t) for antisymmetric L.

    L acts as the cross product with an axis vector omega, so exp(L t) is the
    rotation about omega by |omega| t; the drift integral has the matching
    closed form, with series fallbacks for small angles.
    """
    omega_vec = np.array([L[2, 1], L[0, 2], L[1, 0]])
    omega = float(np.linalg.norm(omega_vec))
    eye = np.eye(3)
    if omega == 0.0:
        return eye, t * eye
    angle = omega * t
    if abs(angle) > _SMALL_ANGLE:
        sin_coeff = np.sin(angle) / omega
        cos_coeff = (1.0 - np.cos(angle)) / (omega * omega)
        int_coeff = (angle - np.sin(angle)) / (omega ** 3)
    else:
        t2, t3 = t * t, t * t * t
        a2 = angle * angle
        sin_coeff = t * (1.0 - a2 / 6.0 + a2 * a2 / 120.0)
        cos_coeff = 0.5 * t2 * (1.0 - a2 / 12.0 + a2 * a2 / 360.0)
        int_coeff = t3 / 6.0 * (1.0 - a2 / 20.0 + a2 * a2 / 840.0)
    L2 = L @ L
    rotation = eye + sin_coeff * L + cos_coeff * L2
    integral = t * eye + cos_coeff * L + int_coeff * L2
    return rotation, integral


def evolve(system: KineticSystem, p0: ProbTriple, t: float, tol: float = DEFAULT_TOL) -> ProbTriple:
    """Propagate a physical triple for time t with the exact affine propagator."""
    qubit_core.require_physical(p0, tol)
    if not np.isfinite(t):
        raise DomainError(f"time must be finite, got {t!r}")
    rotation, integral = _propagator(system.L, float(t))
    return ProbTriple.from_array(rotation @ p0.as_array() + integral @ system.C)


def evolve_observable(a0, h, x: float, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Evolve an observable through the kinetic equation at shift x.

    rho(x, 0) is built from the observable, its triple is propagated, and
    A(t) = (tr A0 + 2x) rho(x, t) - x I undoes the embedding; the trace is
    conserved, so the same normalization applies at both ends.
    """
    m = matrix_oracle.require_hermitian(a0, name="observable")
    p0 = qubit_core.probs_from_density(observable_map.rho_of_x(m, x), tol)
    system = build_kinetic(h, x)
    pt = evolve(system, p0, t, tol)
    denom = float(m[0, 0].real + m[1, 1].real) + 2.0 * float(x)
    return denom * qubit_core.density_from_probs(pt, tol) - float(x) * matrix_oracle.IDENTITY


def sample_trajectory(system: KineticSystem, p0: ProbTriple, t_end: float, steps: int,
                      tol: float = DEFAULT_TOL) -> Trajectory:
    """Uniform time grid of closed-form evolutions from 0 to t_end.

    Every sample is propagated directly from t = 0, so there is no
    accumulation of step error; refining the grid never moves shared times.
    """
    if not np.isfinite(t_end) or t_end <= 0.0:
        raise DomainError(f"t_end must be finite and positive, got {t_end!r}")
    steps = int(steps)
    if steps < 1:
        raise DomainError(f"steps must be at least 1, got {steps}")
    times = np.linspace(0.0, float(t_end), steps + 1)
    probs = np.stack([evolve(system, p0, float(t), tol).as_array() for t in times])
    return Trajectory(times=times, probs=probs, x=system.x)
