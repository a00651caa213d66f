"""Command-line entry point.

    hyperbounds bounds graph.txt --kind signless --format csv
    hyperbounds rho graph.txt --tol 1e-12
    hyperbounds validate --kind adjacency --trials 1000 --seed 0
    hyperbounds validate --kind signless --file p3.txt
    hyperbounds identities --n-max 25 --k-max 8
    hyperbounds gen random-m --n 6 --k 3 --m 10 --seed 7 --out h.txt

Exit codes: 0 ok, 1 identity check failed, 2 bad input, 3 spectral iteration
did not converge, 4 bound violations found.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import hypergraph as hg
from .bounds import KINDS, bound
from .campaign import CampaignConfig, check_fixed, run_campaign
from .combinatorics import identity_sweep
from .spectral import SpectralConfig, spectral_radius

EXIT_OK, EXIT_IDENTITY, EXIT_INPUT, EXIT_NOT_CONVERGED, EXIT_VIOLATION = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def fmt(x: float) -> float:
    """Round to 12 significant digits so printed output is reproducible."""
    return float(f"{x:.12g}")


def _round(obj):
    if isinstance(obj, float):
        return fmt(obj)
    if isinstance(obj, dict):
        return {k: _round(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v) for v in obj]
    return obj


def to_json(obj) -> str:
    return json.dumps(_round(obj), indent=2) + "\n"


def to_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return "" if v is None else str(v)


def _load(path: str) -> hg.Hypergraph:
    try:
        return hg.read(path)
    except (OSError, hg.HypergraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _spectral_config(args) -> SpectralConfig:
    try:
        return SpectralConfig(tolerance=args.tol, max_iterations=args.max_iter, shift=args.shift)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_bounds(args) -> tuple[str, int]:
    h = _load(args.file)
    d = hg.degree_sequence(h)
    report = bound(d, h.n, h.k, args.kind)
    if args.format == "csv":
        rows = [[s, v] for s, v in report.per_s]
        rows.append(["min", report.min_value])
        rows.append(["argmin", report.argmin_s])
        return to_csv(["s", "value"], rows), EXIT_OK
    out = {
        "kind": report.kind,
        "n": report.n,
        "k": report.k,
        "per_s": [{"s": s, "value": v} for s, v in report.per_s],
        "argmin_s": report.argmin_s,
        "min_value": report.min_value,
    }
    return to_json(out), EXIT_OK


def cmd_spectral(args) -> tuple[str, int]:
    h = _load(args.file)
    operator = "adjacency" if args.command == "rho" else "signless"
    est = spectral_radius(h, operator, _spectral_config(args))
    out = {
        "operator": operator, "n": h.n, "k": h.k, "m": h.m,
        "value": est.value, "lower": est.lower, "upper": est.upper,
        "iterations": est.iterations, "converged": est.converged,
        "component_count": est.component_count,
    }
    if args.format == "csv":
        text = to_csv(list(out), [list(out.values())])
    else:
        text = to_json(out)
    return text, EXIT_OK if est.converged else EXIT_NOT_CONVERGED


def cmd_validate(args) -> tuple[str, int]:
    if args.file:
        h = _load(args.file)
        result = check_fixed(h, args.kind, _spectral_config(args), seed=args.seed)
    else:
        m_range = None
        if args.m_min is not None or args.m_max is not None:
            m_range = (args.m_min or 0, args.m_max if args.m_max is not None else 10**18)
        try:
            config = CampaignConfig(
                kind=args.kind, n_min=args.n_min, n_max=args.n_max, k_values=tuple(args.k),
                m_range=m_range, trials=args.trials, seed=args.seed, tolerance=args.tol,
                max_iterations=args.max_iter,
            )
        except ValueError as exc:
            raise InputError(str(exc)) from None
        result = run_campaign(config, jobs=args.jobs)
    return to_json(result.to_dict()), EXIT_VIOLATION if result.violations else EXIT_OK


def cmd_identities(args) -> tuple[str, int]:
    if args.n_max < 4 or args.k_max < 2:
        raise InputError("need --n-max >= 4 and --k-max >= 2")
    header = ["n", "s", "k", "first", "middle", "third", "first_eq_third", "middle_eq_third", "eq3"]
    rows = []
    ok = True
    for eq2, eq3 in identity_sweep(args.n_max, args.k_max):
        rows.append([eq2.n, eq2.s, eq2.k, eq2.first_expr, eq2.middle_expr, eq2.third_expr,
                     eq2.first_equals_third, eq2.middle_equals_third, eq3.holds])
        ok = ok and eq2.first_equals_third and eq3.holds
    if args.format == "json":
        text = to_json([dict(zip(header, r)) for r in rows])
    else:
        text = to_csv(header, rows)
    return text, EXIT_OK if ok else EXIT_IDENTITY


def cmd_gen(args) -> tuple[str, int]:
    try:
        h = hg.generate(args.kind, args.n, args.k, args.m, args.seed, connected=args.connected)
    except hg.HypergraphError as exc:
        raise InputError(str(exc)) from None
    return hg.serialize(h), EXIT_OK


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    # write-then-rename so a failure never leaves a partial file behind
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".hyperbounds-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def build_parser() -> argparse.ArgumentParser:
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", default=None, help="write output here instead of stdout")
    # separate parent per default: argparse shares action objects between children
    common = argparse.ArgumentParser(add_help=False, parents=[output])
    common.add_argument("--format", choices=("json", "csv"), default="json")
    table = argparse.ArgumentParser(add_help=False, parents=[output])
    table.add_argument("--format", choices=("json", "csv"), default="csv")

    spectral = argparse.ArgumentParser(add_help=False)
    spectral.add_argument("--tol", type=float, default=1e-10, help="bracket-width stop")
    spectral.add_argument("--max-iter", type=int, default=1_000_000)
    spectral.add_argument("--shift", type=float, default=1.0, help="diagonal shift in the iteration")

    p = argparse.ArgumentParser(prog="hyperbounds", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bounds", parents=[common], help="degree-sequence upper bounds")
    b.add_argument("file")
    b.add_argument("--kind", choices=KINDS, default="adjacency")
    b.set_defaults(func=cmd_bounds)

    for name, what in (("rho", "adjacency"), ("q", "signless-Laplacian")):
        sp = sub.add_parser(name, parents=[common, spectral], help=f"{what} spectral radius")
        sp.add_argument("file")
        sp.set_defaults(func=cmd_spectral)

    v = sub.add_parser("validate", parents=[common, spectral], help="compare bounds with spectra")
    v.add_argument("--kind", choices=KINDS, default="adjacency")
    v.add_argument("--file", help="check one fixed hypergraph instead of random ones")
    v.add_argument("--n-min", type=int, default=4)
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--k", type=int, nargs="+", default=[2, 3, 4])
    v.add_argument("--m-min", type=int)
    v.add_argument("--m-max", type=int)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_validate)

    i = sub.add_parser("identities", parents=[table], help="exact binomial identity sweep")
    i.add_argument("--n-max", type=int, default=25)
    i.add_argument("--k-max", type=int, default=8)
    i.set_defaults(func=cmd_identities)

    g = sub.add_parser("gen", parents=[output], help="generate a hypergraph file")
    g.add_argument("kind", choices=("complete", "single-edge", "random-m"))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--connected", action="store_true")
    g.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text, code = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _write(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
