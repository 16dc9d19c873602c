"""Cyclic Jacobi driver for the nearest structured normal matrix.

Sweeps over the n^2 pivot positions, solves the per-pivot angle problem,
applies the structure-preserving rotation in place, and accumulates the
transformation Z.  The diagonal weight ||diag(A_k)||_F^2 never decreases
because every pivot solution is at least as good as the identity rotation.
Once the sweep-over-sweep gain stagnates the iterate is declared converged
and the nearest structured normal matrix is assembled as

    X = Z diag(Z^H A Z) Z^H.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .angles import AngleProblem, solve_angles, solve_angles_fixed_alpha
from .gradient import pivot_gain, should_skip, tangent_gradient
from .rotations import RotationSpec, apply_right, apply_similarity, pivot_set, planes
from .structures import (StructureTag, check_structure, diag_norm_sq,
                         offdiag_norm_sq)

PHI_SKIP = 1e-15  # rotations this small are recorded but not applied


class StructureError(ValueError):
    """Input matrix fails its structure check."""


class NonFiniteError(FloatingPointError):
    """Non-finite entries appeared during the iteration."""


@dataclass
class SolverConfig:
    ordering: str = "O1"
    tol: float = 1e-14
    max_sweeps: int = 50
    skip_rule: bool = False
    trace: bool = True

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be >= 1")


@dataclass
class TraceRecord:
    sweep: int
    step: int
    kind: str
    i: int
    j: int
    phi: float
    alpha: float
    diag_norm_sq: float
    offdiag_norm_sq: float
    skipped: bool


@dataclass
class JacobiState:
    """Current iterate A_k = Z_k^H A_0 Z_k and the accumulated Z_k."""

    a: np.ndarray
    z: np.ndarray
    sweep: int = 0
    step: int = 0
    trace: list[TraceRecord] = field(default_factory=list)


@dataclass
class NearestNormalResult:
    x: np.ndarray          # nearest structured normal matrix
    z: np.ndarray          # structured unitary with X = Z D Z^H
    d: np.ndarray          # structured diagonal, diag(Z^H A Z)
    distance: float        # ||A - X||_F
    trace: list[TraceRecord]
    iterate: np.ndarray    # final A_k
    sweeps: int
    converged: bool
    diag_norm_sq: float
    offdiag_norm_sq: float
    structure_residual: float
    grad_norm: float


def distance_to(a: np.ndarray, x: np.ndarray) -> float:
    """Frobenius distance ||A - X||_F."""
    a = np.asarray(a)
    x = np.asarray(x)
    if a.shape != x.shape:
        raise ValueError("shape mismatch")
    return float(np.linalg.norm(a - x))


def _total_norm_sq(a: np.ndarray) -> float:
    return float(np.real(np.vdot(a, a)))


def sweep_once(state: JacobiState, tag: StructureTag, config: SolverConfig) -> JacobiState:
    """One full pass over the pivot set, mutating the state in place."""
    a, z = state.a, state.z
    n = a.shape[0] // 2
    family = tag.family
    pivots = pivot_set(family, n, config.ordering)

    x_sweep = None
    grad_norm = 0.0
    if config.skip_rule:
        x_sweep, grad_norm = tangent_gradient(a, family)

    for kind, i, j in pivots:
        state.step += 1
        if config.skip_rule:
            gain = pivot_gain(x_sweep, RotationSpec(kind, i, j, 0.0))
            if should_skip(gain, grad_norm, n):
                _record(state, kind, i, j, 0.0, 0.0, skipped=True,
                        config=config)
                continue
        problem = AngleProblem.from_matrix(a, i, j, fixed_alpha=kind.fixed_alpha)
        if kind.is_single:
            sol = solve_angles_fixed_alpha(problem)
        else:
            sol = solve_angles(problem)
        if abs(sol.phi) < PHI_SKIP:
            _record(state, kind, i, j, sol.phi, sol.alpha, skipped=True,
                    config=config)
            continue
        spec = RotationSpec(kind, i, j, sol.phi, sol.alpha)
        apply_similarity(a, spec)
        apply_right(z, spec)
        for p, q, _ in planes(spec, n):
            if not (np.isfinite(a[p, :]).all() and np.isfinite(a[q, :]).all()):
                raise NonFiniteError(
                    f"non-finite entries at sweep {state.sweep + 1}, "
                    f"step {state.step}, pivot ({i}, {j})")
        _record(state, kind, i, j, sol.phi, sol.alpha, skipped=False,
                config=config)
    state.sweep += 1
    return state


def _record(state, kind, i, j, phi, alpha, skipped, config):
    if not config.trace:
        return
    state.trace.append(TraceRecord(
        sweep=state.sweep + 1, step=state.step, kind=kind.value, i=i, j=j,
        phi=phi, alpha=alpha, diag_norm_sq=diag_norm_sq(state.a),
        offdiag_norm_sq=offdiag_norm_sq(state.a), skipped=skipped))


def solve(a: np.ndarray, tag: StructureTag,
          config: SolverConfig | None = None) -> NearestNormalResult:
    """Nearest structured normal matrix to A, with the transformation trace."""
    if config is None:
        config = SolverConfig()
    a0 = np.array(a, dtype=np.complex128)
    if a0.ndim != 2 or a0.shape[0] != a0.shape[1]:
        raise ValueError("matrix must be square")
    if a0.shape[0] % 2 != 0:
        raise ValueError("even dimension required")
    if not np.isfinite(a0).all():
        raise NonFiniteError("input matrix has non-finite entries")
    resid = check_structure(a0, tag)
    if resid > 1e-10:
        raise StructureError(
            f"input is not {tag.value} (residual {resid:.3e} > 1e-10)")

    dim = a0.shape[0]
    state = JacobiState(a=a0.copy(), z=np.eye(dim, dtype=np.complex128))
    norm_sq = _total_norm_sq(a0)
    prev = diag_norm_sq(state.a)
    converged = False
    for _ in range(config.max_sweeps):
        sweep_once(state, tag, config)
        cur = diag_norm_sq(state.a)
        if cur - prev < config.tol * norm_sq:
            converged = True
            break
        prev = cur

    d_vec = np.diagonal(state.a).copy()
    x = (state.z * d_vec[None, :]) @ state.z.conj().T
    _, grad_norm = tangent_gradient(state.a, tag.family)
    return NearestNormalResult(
        x=x, z=state.z, d=np.diag(d_vec), distance=distance_to(a0, x),
        trace=state.trace, iterate=state.a, sweeps=state.sweep,
        converged=converged, diag_norm_sq=diag_norm_sq(state.a),
        offdiag_norm_sq=offdiag_norm_sq(state.a),
        structure_residual=check_structure(x, tag), grad_norm=grad_norm)
