"""Command-line interface.

Subcommands:

* ``gen``        write a random structured fixture (optionally normal)
* ``solve``      run the Jacobi solver, write the nearest normal matrix
* ``verify``     structure residual of a matrix file, tolerance-gated exit
* ``distance``   Frobenius distance between two matrix files
* ``normality``  commutator residual ||X X^H - X^H X||_F
* ``experiment`` convergence-study CSV suites (figures 1-4)

Exit codes: 0 success (solve prints converged=0 as a warning flag when the
sweep limit was hit), 1 verify residual above tolerance, 2 usage or file
errors, 3 solve input failing its structure check.  The default seed is 0,
overridable with the STRUCTNORM_SEED environment variable.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import jacobi
from .matrixio import MatrixFileError, read_matrix, write_matrix
from .structures import (StructureTag, check_structure, diag_norm_sq,
                         frob_norm, gen_normal_structured, gen_structured,
                         offdiag_norm_sq)

_TAG_NAMES = [t.value for t in StructureTag]


def _default_seed() -> int:
    return int(os.environ.get("STRUCTNORM_SEED", "0"))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _read(path: str) -> np.ndarray:
    try:
        return read_matrix(path)
    except (OSError, MatrixFileError) as exc:
        raise _CliError(2, str(exc)) from exc


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def cmd_gen(args) -> int:
    tag = StructureTag.from_name(args.structure)
    if args.normal:
        a, _, _ = gen_normal_structured(tag, args.n, args.seed,
                                        n_rot=args.rotations)
    else:
        a = gen_structured(tag, args.n, args.seed)
    try:
        write_matrix(args.out, a)
    except OSError as exc:
        raise _CliError(2, f"cannot write {args.out}: {exc}") from exc
    return 0


def cmd_solve(args) -> int:
    tag = StructureTag.from_name(args.structure)
    a = _read(args.infile)
    resid = check_structure(a, tag)
    if resid > 1e-10:
        raise _CliError(
            3, f"input is not {tag.value}: residual {_fmt(resid)} > 1e-10")
    config = jacobi.SolverConfig(ordering=args.ordering.upper(), tol=args.tol,
                                 max_sweeps=args.max_sweeps,
                                 skip_rule=args.skip_rule)
    result = jacobi.solve(a, tag, config)
    try:
        write_matrix(args.out_normal, result.x)
        write_matrix(args.out_z, result.z)
        if args.trace:
            _write_trace(args.trace, result.trace)
    except OSError as exc:
        raise _CliError(2, f"cannot write output: {exc}") from exc
    print(f"sweeps={result.sweeps} converged={int(result.converged)} "
          f"distance={_fmt(result.distance)} "
          f"offdiag_norm={_fmt(result.offdiag_norm_sq ** 0.5)} "
          f"diag_norm={_fmt(result.diag_norm_sq ** 0.5)} "
          f"structure_residual={_fmt(result.structure_residual)} "
          f"grad_norm={_fmt(result.grad_norm)}")
    return 0


def _write_trace(path, records) -> None:
    lines = ["sweep,step,kind,i,j,phi,alpha,diag_norm_sq,offdiag_norm_sq,skipped"]
    for r in records:
        lines.append(
            f"{r.sweep},{r.step},{r.kind},{r.i},{r.j},{_fmt(r.phi)},"
            f"{_fmt(r.alpha)},{_fmt(r.diag_norm_sq)},{_fmt(r.offdiag_norm_sq)},"
            f"{int(r.skipped)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def cmd_verify(args) -> int:
    tag = StructureTag.from_name(args.structure)
    resid = check_structure(_read(args.infile), tag)
    print(_fmt(resid))
    return 0 if resid <= args.tol else 1


def cmd_distance(args) -> int:
    a = _read(args.a)
    b = _read(args.b)
    if a.shape != b.shape:
        raise _CliError(2, "matrices have different shapes")
    print(_fmt(jacobi.distance_to(a, b)))
    return 0


def cmd_normality(args) -> int:
    x = _read(args.infile)
    if x.shape[0] != x.shape[1]:
        raise _CliError(2, "matrix must be square")
    comm = x @ x.conj().T - x.conj().T @ x
    print(_fmt(float(np.linalg.norm(comm))))
    return 0


def _sweep_series(a, tag, sweeps, ordering):
    """Per-sweep (diag, offdiag, frob) norms, sweep 0 = the input."""
    config = jacobi.SolverConfig(ordering=ordering, trace=False)
    state = jacobi.JacobiState(a=np.array(a, dtype=np.complex128),
                               z=np.eye(a.shape[0], dtype=np.complex128))
    rows = [(0, diag_norm_sq(state.a) ** 0.5, offdiag_norm_sq(state.a) ** 0.5,
             frob_norm(state.a))]
    for k in range(1, sweeps + 1):
        jacobi.sweep_once(state, tag, config)
        rows.append((k, diag_norm_sq(state.a) ** 0.5,
                     offdiag_norm_sq(state.a) ** 0.5, frob_norm(state.a)))
    return rows


def _write_series(path, rows, header_comment=None) -> None:
    lines = []
    if header_comment:
        lines.append(f"# {header_comment}")
    lines.append("sweep,diag_norm,offdiag_norm,frob_norm")
    for sweep, dn, on, fn in rows:
        lines.append(f"{sweep},{_fmt(dn)},{_fmt(on)},{_fmt(fn)}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def _skew_hamiltonian_with_real_eigenpair(n, seed, lam=1.5):
    """Random skew-Hamiltonian matrix with a planted real eigenpair.

    Rows/columns 1 and n+1 are cleared except for the diagonal value lam, so
    e_1 and e_{n+1} are eigenvectors with the real eigenvalue lam; clearing a
    matching row/column pair keeps the block constraints intact.
    """
    w = gen_structured(StructureTag.SKEW_HAMILTONIAN, n, seed)
    for k in (0, n):
        w[k, :] = 0.0
        w[:, k] = 0.0
        w[k, k] = lam
    return w


def cmd_experiment(args) -> int:
    out = Path(args.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise _CliError(2, f"cannot create {out}: {exc}") from exc
    seed = args.seed
    fig = args.figure
    n = args.n

    if fig == 1:
        n = n or 25
        a = gen_structured(StructureTag.HAMILTONIAN, n, seed)
        config = jacobi.SolverConfig(trace=False)
        state = jacobi.JacobiState(a=a.copy(),
                                   z=np.eye(2 * n, dtype=np.complex128))
        _write_abs_grid(out / "fig1_sweep0.csv", state.a)
        for k in (1, 2, 3):
            jacobi.sweep_once(state, StructureTag.HAMILTONIAN, config)
            _write_abs_grid(out / f"fig1_sweep{k}.csv", state.a)
    elif fig == 2:
        n = n or 50
        generic = gen_structured(StructureTag.HAMILTONIAN, n, seed)
        diagable, _, _ = gen_normal_structured(StructureTag.HAMILTONIAN, n,
                                               seed + 1)
        _write_series(out / "fig2_generic.csv",
                      _sweep_series(generic, StructureTag.HAMILTONIAN, 20, "O1"),
                      "fixture: random hamiltonian")
        _write_series(out / "fig2_diagonalizable.csv",
                      _sweep_series(diagable, StructureTag.HAMILTONIAN, 20, "O1"),
                      "fixture: normal hamiltonian (diagonalizable by symplectic rotations)")
    elif fig == 3:
        n = n or 25
        generic = gen_structured(StructureTag.SKEW_HAMILTONIAN, n, seed)
        planted = _skew_hamiltonian_with_real_eigenpair(n, seed + 1)
        _write_series(out / "fig3_no_real_eigs.csv",
                      _sweep_series(generic, StructureTag.SKEW_HAMILTONIAN, 20, "O1"),
                      "fixture: random skew-hamiltonian (generic spectrum)")
        _write_series(out / "fig3_with_real_eigs.csv",
                      _sweep_series(planted, StructureTag.SKEW_HAMILTONIAN, 20, "O1"),
                      "fixture: random skew-hamiltonian with rows/cols 1 and n+1 "
                      "cleared and a planted real eigenpair of value 1.5")
    else:
        n = n or 25
        generic = gen_structured(StructureTag.HAMILTONIAN, n, seed)
        diagable, _, _ = gen_normal_structured(StructureTag.HAMILTONIAN, n,
                                               seed + 1)
        for name, a in (("generic", generic), ("diagonalizable", diagable)):
            for ordering in ("O1", "O2"):
                _write_series(
                    out / f"fig4_{name}_{ordering.lower()}.csv",
                    _sweep_series(a, StructureTag.HAMILTONIAN, 20, ordering),
                    f"fixture: {name} hamiltonian, ordering {ordering}")
    return 0


def _write_abs_grid(path, a) -> None:
    lines = [",".join(_fmt(abs(v)) for v in row) for row in a]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="structnorm",
        description="Nearest structured normal matrix via Jacobi rotations")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random structured fixture")
    p.add_argument("--structure", required=True, choices=_TAG_NAMES)
    p.add_argument("--n", type=int, required=True,
                   help="half-dimension; the matrix is 2n x 2n")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--normal", action="store_true",
                   help="generate a normal (diagonalizable) fixture")
    p.add_argument("--rotations", type=int, default=None,
                   help="rotation count for --normal (default 4 n^2)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve for the nearest structured normal matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--structure", required=True, choices=_TAG_NAMES)
    p.add_argument("--ordering", choices=["o1", "o2", "O1", "O2"], default="O1")
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--max-sweeps", type=int, default=50)
    p.add_argument("--skip-rule", action="store_true")
    p.add_argument("--out-normal", required=True)
    p.add_argument("--out-z", required=True)
    p.add_argument("--trace", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check the structure residual of a file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--structure", required=True, choices=_TAG_NAMES)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="Frobenius distance between two files")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("normality", help="commutator residual of a file")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_normality)

    p = sub.add_parser("experiment", help="write convergence-study CSV files")
    p.add_argument("--figure", type=int, required=True, choices=[1, 2, 3, 4])
    p.add_argument("--n", type=int, default=None,
                   help="half-dimension (default per figure: 25, 50, 25, 25)")
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except jacobi.StructureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, jacobi.NonFiniteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
