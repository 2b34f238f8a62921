"""Command-line front end.

Exit codes: 0 success, 1 numeric check failure (or invalid data at a sample),
2 usage or schema error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import core, verify
from .bw import (Amplitudes, FixedList, NullOmega, RandomTimelike, StandardTime,
                 extract_massive, extract_massless, norm_integrand,
                 synth_massive, synth_massless)
from .errors import BWSpinorError, OrthogonalDirection, SchemaError
from .fileio import (read_amplitude_file, read_field_file, write_amplitude_file,
                     write_field_file)
from .frames import frame_massive, frame_massless
from .pauli_lubanski import pl_eigenvalues
from .quadrature import GaussianPacket, build_grid, pairwise_sum

USAGE_ERROR = 2
CHECK_ERROR = 1


def _parse_reals(text: str, count: int, what: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != count:
        raise argparse.ArgumentTypeError(f"{what} needs {count} comma-separated values")
    try:
        return np.array([float(x) for x in parts])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad {what}: {exc}") from exc


def _parse_complex_pair(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("--nu needs two comma-separated complex values")
    try:
        return np.array([complex(x) for x in parts])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad spinor component: {exc}") from exc


def _parse_tspec(text: str, n: int):
    if text == "standard":
        return StandardTime()
    if text == "null-omega":
        return NullOmega()
    if text.startswith("random:"):
        return RandomTimelike(int(text.split(":", 1)[1]))
    if text.startswith("fixed:"):
        body = text.split(":", 1)[1]
        vecs = [np.array([float(x) for x in chunk.split(",")])
                for chunk in body.split(";")]
        if any(v.shape != (4,) for v in vecs):
            raise argparse.ArgumentTypeError("fixed spec needs 4 components per vector")
        if len(vecs) == 1:
            vecs = vecs * n
        return FixedList(tuple(vecs))
    raise argparse.ArgumentTypeError(f"unknown direction spec {text!r}")


def cmd_verify(args) -> int:
    names = verify.SUITES.keys() if args.suite == "all" else [args.suite]
    reports = verify.run_suites(list(names), args.trials, args.seed)
    worst = 0.0
    for suite, rep in reports.items():
        for name, residual in rep.items():
            status = "ok" if residual < args.tol else "FAIL"
            print(f"{suite:8s} {name:34s} {residual:12.3e}  {status}")
            worst = max(worst, residual)
    print(f"worst residual: {worst:.3e} (tolerance {args.tol:g})")
    return 0 if worst < args.tol else CHECK_ERROR


def cmd_frame(args) -> int:
    p = np.concatenate([[np.sqrt(args.mass ** 2 + np.sum(args.p ** 2))], args.p])
    if args.mass > 0:
        if args.nu is None:
            print("error: --nu is required for massive frames", file=sys.stderr)
            return USAGE_ERROR
        fr = frame_massive(p, args.nu)
    else:
        fr = frame_massless(p)
    half_plus, half_minus = pl_eigenvalues(fr.omega_vec, p)
    data = {
        "p": p.tolist(),
        "mass": args.mass,
        "pi": [[z.real, z.imag] for z in fr.pi],
        "omega": [[z.real, z.imag] for z in fr.omega],
        "pi_vec": fr.pi_vec.tolist(),
        "omega_vec": fr.omega_vec.tolist(),
        "omega_dot_p": float(core.minkowski(fr.omega_vec, p)),
        "lambda_plus": float(2 * half_plus),
        "lambda_minus": float(2 * half_minus),
    }
    if args.json:
        json.dump(data, sys.stdout)
        print()
    else:
        print(f"p          = {data['p']}")
        print(f"pi         = {fr.pi}")
        print(f"omega      = {fr.omega}")
        print(f"pi_vec     = {data['pi_vec']}")
        print(f"omega_vec  = {data['omega_vec']}")
        print(f"omega.p    = {data['omega_dot_p']:.7f}")
        print(f"lambda(+-) = +-{data['lambda_plus']:.7f}")
    return 0


def _frames_for(p: np.ndarray, mass: float, nu: np.ndarray | None):
    if mass > 0:
        return frame_massive(p, nu if nu is not None else np.array([1.0, 0.0]))
    return frame_massless(p)


def cmd_synth(args) -> int:
    data = read_amplitude_file(args.infile)
    amps, p = data.amplitudes, data.p
    fr = _frames_for(p, amps.mass, args.nu)
    norm = None if data.normalization == "paper-default" else data.normalization
    if amps.mass > 0:
        psi = synth_massive(fr, amps, norm)
    else:
        psi = synth_massless(fr.pi, amps.f[..., 0], amps.n, amps.sign)
    write_field_file(args.outfile, psi, data.weights)
    print(f"wrote {args.outfile}: n={amps.n}, mass={amps.mass}, "
          f"samples={p.shape[0]}")
    return 0


def cmd_extract(args) -> int:
    data = read_field_file(args.infile)
    psi = data.component
    fr = _frames_for(psi.p, psi.mass, args.nu)
    if psi.mass > 0:
        amps = extract_massive(psi, fr)
    else:
        f = extract_massless(psi, fr.omega)
        amps = Amplitudes(n=psi.n, mass=0.0, sign=psi.sign, f=f[..., None])
    write_amplitude_file(args.outfile, amps, psi.p, data.weights)
    print(f"wrote {args.outfile}: n={amps.n}, mass={amps.mass}, "
          f"samples={psi.p.shape[0]}")
    return 0


def cmd_norm(args) -> int:
    data = read_field_file(args.infile)
    psi = data.component
    if data.weights is None:
        print("error: norm needs per-sample weights in the field file",
              file=sys.stderr)
        return USAGE_ERROR
    fr = _frames_for(psi.p, psi.mass, args.nu)
    specs = args.t or ["standard"]
    values = []
    for text in specs:
        spec = _parse_tspec(text, psi.n)
        integrand = norm_integrand(psi, spec, fr)
        values.append(pairwise_sum(integrand * data.weights))
        print(f"norm[{text}] = {values[-1]!r}")
    if len(values) > 1:
        base = values[0]
        spread = max(abs(v - base) for v in values[1:]) / max(1.0, abs(base))
        print(f"max relative spread = {spread:.3e}")
    if args.standard_bw:
        from .bw import standard_bw_integrand
        std = pairwise_sum(standard_bw_integrand(psi) * data.weights)
        print(f"standard-bw norm = {std!r}")
        if std != 0.0:
            print(f"ratio generalized/standard = {values[0] / std!r}")
    return 0


def cmd_packet(args) -> int:
    grid = build_grid(args.mass, args.half_width, args.points)
    coeffs = tuple(complex(c) for c in args.coeffs.split(",")) if args.coeffs \
        else tuple([1.0] * ((args.n + 1) if args.mass > 0 else 1))
    want = (args.n + 1) if args.mass > 0 else 1
    if len(coeffs) != want:
        print(f"error: need {want} coefficients", file=sys.stderr)
        return USAGE_ERROR
    packet = GaussianPacket(n=args.n, mass=args.mass, sign=+1, coeffs=coeffs,
                            center=tuple(args.center), sigma=args.sigma)
    amps = Amplitudes(n=args.n, mass=args.mass, sign=+1,
                      f=packet.amplitudes(grid.p))
    write_amplitude_file(args.outfile, amps, grid.p, grid.weights)
    print(f"wrote {args.outfile}: {grid.p.shape[0]} samples on a "
          f"{args.points}^3 grid, L={args.half_width}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bwspinor",
        description="Spin-frame, Pauli-Lubanski, and Bargmann-Wigner norm tools")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run identity suites")
    p_verify.add_argument("--suite", default="all",
                          choices=["all", *verify.SUITES.keys()])
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--tol", type=float, default=1e-10)
    p_verify.set_defaults(func=cmd_verify)

    p_frame = sub.add_parser("frame", help="inspect the spin-frame of a momentum")
    p_frame.add_argument("--p", type=lambda s: _parse_reals(s, 3, "--p"),
                         required=True, help="spatial momentum px,py,pz")
    p_frame.add_argument("--mass", type=float, required=True)
    p_frame.add_argument("--nu", type=_parse_complex_pair, default=None,
                         help="reference spinor a,b (massive only)")
    p_frame.add_argument("--json", action="store_true")
    p_frame.set_defaults(func=cmd_frame)

    p_synth = sub.add_parser("synth", help="amplitude file -> field file")
    p_synth.add_argument("--in", dest="infile", required=True)
    p_synth.add_argument("--out", dest="outfile", required=True)
    p_synth.add_argument("--nu", type=_parse_complex_pair, default=None)
    p_synth.set_defaults(func=cmd_synth)

    p_extract = sub.add_parser("extract", help="field file -> amplitude file")
    p_extract.add_argument("--in", dest="infile", required=True)
    p_extract.add_argument("--out", dest="outfile", required=True)
    p_extract.add_argument("--nu", type=_parse_complex_pair, default=None)
    p_extract.set_defaults(func=cmd_extract)

    p_norm = sub.add_parser("norm", help="evaluate the generalized norm")
    p_norm.add_argument("--in", dest="infile", required=True)
    p_norm.add_argument("--t", action="append", default=None,
                        help="standard | null-omega | random:<seed> | "
                             "fixed:<t0,t1,t2,t3>[;...] (repeatable)")
    p_norm.add_argument("--nu", type=_parse_complex_pair, default=None)
    p_norm.add_argument("--standard-bw", action="store_true",
                        help="also print the standard component-sum norm")
    p_norm.set_defaults(func=cmd_norm)

    p_packet = sub.add_parser("packet",
                              help="generate a Gaussian wavepacket amplitude file")
    p_packet.add_argument("--n", type=int, required=True)
    p_packet.add_argument("--mass", type=float, required=True)
    p_packet.add_argument("--out", dest="outfile", required=True)
    p_packet.add_argument("--half-width", type=float, default=3.0)
    p_packet.add_argument("--points", type=int, default=12)
    p_packet.add_argument("--sigma", type=float, default=0.8)
    p_packet.add_argument("--center", type=lambda s: _parse_reals(s, 3, "--center"),
                          default=np.zeros(3))
    p_packet.add_argument("--coeffs", default=None,
                          help="comma-separated complex amplitude coefficients")
    p_packet.set_defaults(func=cmd_packet)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SchemaError as exc:
        print(f"schema error at {exc.pointer or '/'}: {exc.message}", file=sys.stderr)
        return USAGE_ERROR
    except OrthogonalDirection as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_ERROR
    except BWSpinorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_ERROR


if __name__ == "__main__":
    sys.exit(main())
