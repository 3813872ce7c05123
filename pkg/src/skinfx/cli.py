"""Deterministic command-line front end.

Each subcommand maps onto one library operation and emits CSV with fixed
column order and 17-significant-digit floats, so identical inputs produce
byte-identical datasets. Files are written atomically (temp + rename) and
every dataset run leaves a JSON manifest sidecar with the resolved
parameters, tool version, output list and wall-clock duration. Without
--out the primary table goes to stdout and no manifest is written. The
environment variable SKINFX_THREADS caps internal parallelism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from importlib import metadata

import numpy as np

from .bands import DimerParams, critical_gamma, material_band_eigs, vorticity
from .capmat import (
    build_gauge_capacitance,
    material_spectrum,
    positive_real_sqrt,
    reconstruct_mode,
    solve_spectrum,
)
from .gbz import cell_band_eigs, convergence_study, gbz_curve, recover_modes
from .geometry import cell_from_config, chain_from_config, resonator_positions
from .spectral_analysis import level_set_polylines, pseudospectrum

try:
    __version__ = metadata.version("skinfx")
except metadata.PackageNotFoundError:
    __version__ = "0+unknown"


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _csv_text(header: list[str] | None, rows) -> str:
    lines = [] if header is None else [",".join(header)]
    lines.extend(",".join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> list[str]:
    if out is None:
        sys.stdout.write(text)
        return []
    _write_atomic(out, text)
    return [out]


def _sibling(out: str, suffix: str) -> str:
    root, ext = os.path.splitext(out)
    return root + suffix + (ext or ".csv")


def _read_text(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _float_list(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part != ""]


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part != ""]


def _window4(text: str) -> tuple[float, float, float, float]:
    parts = _float_list(text)
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("window needs four numbers a,b,c,d")
    return tuple(parts)


def _truncate5(value: float) -> str:
    text = f"{value:.10f}"
    return text[: text.index(".") + 6]


def _solve_chain(chain):
    if chain.speeds is not None:
        return material_spectrum(chain)
    return solve_spectrum(build_gauge_capacitance(chain))


def _spectrum_tables(result) -> tuple[str, str]:
    main = _csv_text(
        ["index", "lambda_re", "lambda_im", "omega_re", "omega_im", "localization"],
        ([str(j), _fmt(lam.real), _fmt(lam.imag), _fmt(om.real), _fmt(om.imag), _fmt(loc)]
         for j, (lam, om, loc) in enumerate(zip(result.lambdas, result.omegas,
                                                result.localization))),
    )
    vectors = _csv_text(
        ["mode_index", "site", "v_re", "v_im"],
        ([str(j), str(i), _fmt(v.real), _fmt(v.imag)]
         for j in range(result.vectors.shape[1])
         for i, v in enumerate(result.vectors[:, j])),
    )
    return main, vectors


def _emit_spectrum(result, out: str | None) -> list[str]:
    main, vectors = _spectrum_tables(result)
    outputs = _emit(main, out)
    if out is not None:
        vec_path = _sibling(out, "_vectors")
        _write_atomic(vec_path, vectors)
        outputs.append(vec_path)
    return outputs


def _run_capmat(args) -> list[str]:
    chain = chain_from_config(_read_text(args.config))
    entries = build_gauge_capacitance(chain).entries
    text = _csv_text(None, ([_fmt(v) for v in row] for row in entries))
    return _emit(text, args.out)


def _run_spectrum(args) -> list[str]:
    chain = chain_from_config(_read_text(args.config))
    return _emit_spectrum(_solve_chain(chain), args.out)


def _run_modes(args) -> list[str]:
    chain = chain_from_config(_read_text(args.config))
    if args.grid < 2:
        raise ValueError("grid needs at least two points")
    result = _solve_chain(chain)
    extent = resonator_positions(chain)[-1][1]
    grid = np.linspace(0.0, extent, args.grid)
    rows = []
    for j in range(result.vectors.shape[1]):
        u = reconstruct_mode(chain, result.vectors[:, j], grid)
        rows.extend([str(j), _fmt(x), _fmt(v.real), _fmt(v.imag)]
                    for x, v in zip(grid, u))
    return _emit(_csv_text(["mode_index", "x", "u_re", "u_im"], rows), args.out)


def _run_interface(args) -> list[str]:
    from .geometry import interface_chain

    chain = interface_chain(args.n, args.gamma, length=args.length,
                            spacing=args.spacing, delta=args.delta, v_b=args.v_b)
    result = solve_spectrum(build_gauge_capacitance(chain))
    return _emit_spectrum(result, args.out)


def _run_pseudospectrum(args) -> list[str]:
    chain = chain_from_config(_read_text(args.config))
    C = build_gauge_capacitance(chain)
    A = C.entries / np.asarray(chain.lengths)[:, None]
    grid = pseudospectrum(A, window=args.window, resolution=args.res,
                          eps_levels=tuple(args.eps))
    main = _csv_text(
        ["re", "im", "sigma_min"],
        ([_fmt(re), _fmt(im), _fmt(grid.sigma_min[i, j])]
         for i, im in enumerate(grid.im_axis)
         for j, re in enumerate(grid.re_axis)),
    )
    outputs = _emit(main, args.out)
    if args.out is not None:
        rows = []
        for eps in args.eps:
            for seg_id, poly in enumerate(level_set_polylines(grid, eps)):
                rows.extend([_fmt(eps), str(seg_id), _fmt(z.real), _fmt(z.imag)]
                            for z in poly)
        level_path = _sibling(args.out, "_levels")
        _write_atomic(level_path, _csv_text(["eps", "segment_id", "re", "im"], rows))
        outputs.append(level_path)
    return outputs


def _run_bands(args) -> list[str]:
    cell = cell_from_config(_read_text(args.cell))
    if args.samples < 1:
        raise ValueError("need at least one sample")
    L = cell.cell_length
    rows = []
    for m in range(1, args.samples + 1):
        alpha = -np.pi / L + 2.0 * np.pi / L * m / args.samples
        if cell.speeds is not None:
            sample = material_band_eigs(cell, alpha)
            lams, omegas = sample.lambdas, sample.omegas
        else:
            lams = cell_band_eigs(cell, alpha)
            omegas = [cell.v_b * positive_real_sqrt(cell.delta * z) for z in lams]
        rows.extend(
            [_fmt(alpha), _fmt(0.0), str(b), _fmt(lam.real), _fmt(lam.imag),
             _fmt(om.real), _fmt(om.imag)]
            for b, (lam, om) in enumerate(zip(lams, omegas)))
    header = ["alpha_re", "alpha_im", "band_index", "lambda_re", "lambda_im",
              "omega_re", "omega_im"]
    return _emit(_csv_text(header, rows), args.out)


def _run_exceptional(args) -> list[str]:
    try:
        value = critical_gamma(args.s1, args.s2)
    except ValueError:
        print("gamma_c=none")
        return []
    print(f"gamma_c={_truncate5(value)}")
    return []


def _run_vorticity(args) -> list[str]:
    nu = vorticity(DimerParams(args.s1, args.s2, args.gamma), samples=args.samples)
    print(f"nu={nu}")
    return []


def _run_gbz(args) -> list[str]:
    cell = cell_from_config(_read_text(args.cell))
    rows = []
    for band in range(cell.size):
        rows.extend([_fmt(p.alpha), _fmt(p.beta), _fmt(p.lam), str(p.band_index)]
                    for p in gbz_curve(cell, band_index=band,
                                       alpha_samples=args.alpha_samples))
    return _emit(_csv_text(["alpha", "beta", "lambda", "band_index"], rows), args.out)


def _run_recover(args) -> list[str]:
    chain = chain_from_config(_read_text(args.config))
    cell = cell_from_config(_read_text(args.cell))
    rows = [
        [str(r.mode_index), _fmt(r.omega.real), _fmt(r.omega.imag),
         _fmt(r.alpha_hat.real), _fmt(r.alpha_hat.imag), _fmt(r.residual)]
        for r in recover_modes(chain, cell)
    ]
    header = ["mode_index", "omega_re", "omega_im", "alpha_re", "alpha_im", "residual"]
    return _emit(_csv_text(header, rows), args.out)


def _run_convergence(args) -> list[str]:
    cell = cell_from_config(_read_text(args.cell))
    rows = [[str(n), _fmt(dist)] for n, dist in convergence_study(cell, args.sizes)]
    return _emit(_csv_text(["N", "max_distance"], rows), args.out)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skinfx",
        description="Gauge capacitance matrices, skin-effect spectra, bands, "
                    "generalised Brillouin zones.",
        epilog="SKINFX_THREADS caps internal parallelism (default: small).")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("capmat", help="dump the gauge capacitance matrix")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_capmat)

    p = sub.add_parser("spectrum", help="eigenvalues, frequencies, eigenvectors")
    p.add_argument("--config", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_spectrum)

    p = sub.add_parser("modes", help="reconstructed physical-space modes u(x)")
    p.add_argument("--config", required=True)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_modes)

    p = sub.add_parser("interface", help="sign-switching gauge chain spectrum")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--length", type=float, required=True)
    p.add_argument("--spacing", type=float, required=True)
    p.add_argument("--delta", type=float, default=0.001)
    p.add_argument("--v_b", type=float, default=1.0)
    p.add_argument("--out")
    p.set_defaults(handler=_run_interface)

    p = sub.add_parser("pseudospectrum", help="resolvent norm map and level sets")
    p.add_argument("--config", required=True)
    p.add_argument("--eps", type=_float_list, required=True)
    p.add_argument("--res", type=int, required=True)
    p.add_argument("--window", type=_window4)
    p.add_argument("--out")
    p.set_defaults(handler=_run_pseudospectrum)

    p = sub.add_parser("bands", help="band sweep over the real Brillouin zone")
    p.add_argument("--cell", required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_bands)

    p = sub.add_parser("exceptional", help="critical gauge strength of a dimer")
    p.add_argument("--s1", type=float, required=True)
    p.add_argument("--s2", type=float, required=True)
    p.set_defaults(handler=_run_exceptional)

    p = sub.add_parser("vorticity", help="band-difference winding of a dimer")
    p.add_argument("--s1", type=float, required=True)
    p.add_argument("--s2", type=float, required=True)
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--samples", type=int, default=256)
    p.set_defaults(handler=_run_vorticity)

    p = sub.add_parser("gbz", help="generalised Brillouin zone curve")
    p.add_argument("--cell", required=True)
    p.add_argument("--alpha-samples", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_gbz)

    p = sub.add_parser("recover", help="per-mode quasiperiodicity recovery")
    p.add_argument("--config", required=True)
    p.add_argument("--cell", required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_recover)

    p = sub.add_parser("convergence", help="finite-to-infinite spectral convergence")
    p.add_argument("--cell", required=True)
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--out")
    p.set_defaults(handler=_run_convergence)

    return parser


def _write_manifest(command: str, args, outputs: list[str], duration: float) -> None:
    params = {k: v for k, v in vars(args).items()
              if k not in ("handler", "command") and not k.startswith("_")}
    for key, value in params.items():
        if isinstance(value, tuple):
            params[key] = list(value)
    manifest = {
        "command": command,
        "parameters": params,
        "version": __version__,
        "outputs": outputs,
        "duration_seconds": duration,
    }
    _write_atomic(outputs[0] + ".manifest.json",
                  json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def run(argv: list[str]) -> int:
    """Parse argv, run one subcommand, return the process exit code.

    0 on success, 1 on validation errors (bad flags, bad configs, missing
    files), 2 on numerical failures.
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    started = time.monotonic()
    try:
        outputs = args.handler(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    if outputs:
        _write_manifest(args.command, args, outputs, time.monotonic() - started)
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else list(argv))


if __name__ == "__main__":
    sys.exit(main())
