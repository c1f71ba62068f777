"""Command-line entry point: ``ratline <command> [options]``.

Output goes to ``--out`` (format from the extension, ``.csv`` or ``.json``)
or to stdout as CSV.  JSON files have the layout
``{"meta": {"beta", "n", "function", ...}, "data": [...]}``; complex
numbers are written as separate ``*_re`` / ``*_im`` fields.
"""
from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from pathlib import Path

import numpy as np

from ..calculus import differentiate_osc, fourier_transform
from ..cauchy import OscillatoryFunction, cauchy_apply, cauchy_offaxis
from ..mobius import MobiusMap, PoleError
from ..trig import QuadratureError, kernel_norm
from .functions import FUNCTIONS, approximate, get_function
from .oracles import oracle_cauchy, oracle_fourier
from .report import convergence_sweep

__all__ = ["main", "parse_range", "build_parser"]


def parse_range(text: str, integer: bool = False) -> np.ndarray:
    """Parse ``start:stop:step`` (inclusive), ``start:stop:dyadic`` or ``a,b,c``."""
    conv = int if integer else float
    text = text.strip()
    try:
        if ":" not in text:
            vals = [conv(v) for v in text.split(",") if v.strip()]
        else:
            parts = text.split(":")
            if len(parts) != 3:
                raise ValueError
            start, stop = conv(parts[0]), conv(parts[1])
            if parts[2] == "dyadic":
                if start <= 0:
                    raise ValueError
                vals = []
                v = start
                while v <= stop:
                    vals.append(v)
                    v *= 2
            else:
                step = conv(parts[2])
                if step <= 0:
                    raise ValueError
                count = int(np.floor((stop - start) / step + 1e-9)) + 1
                vals = [start + i * step for i in range(max(count, 0))]
                if not integer:
                    vals = [round(v, 12) for v in vals]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if not vals:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return np.array(vals, dtype=int if integer else float)


def _int_range(text):
    return parse_range(text, integer=True)


def _complex_list(text):
    try:
        return np.array([complex(v.replace(" ", "")) for v in text.split(",")])
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad complex list {text!r}") from None


def _split(name, values):
    values = np.asarray(values, dtype=complex)
    return {f"{name}_re": values.real, f"{name}_im": values.imag}


def _columns_to_rows(cols: dict) -> list[dict]:
    keys = list(cols)
    n = len(next(iter(cols.values())))
    return [{k: _scalar(cols[k][i]) for k in keys} for i in range(n)]


def _scalar(v):
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating, float)):
        return float(v)
    return v


def _emit(args, meta: dict, rows: list[dict], extra: dict | None = None):
    out = args.out
    fmt = args.format or (Path(out).suffix.lstrip(".") if out else "csv")
    if fmt not in ("csv", "json"):
        raise ValueError(f"unknown output format {fmt!r}")
    if fmt == "json":
        doc = {"meta": meta, "data": rows, **(extra or {})}
        text = json.dumps(doc, indent=2)
        if out:
            Path(out).write_text(text + "\n", encoding="utf-8")
        else:
            print(text)
        return
    fh = open(out, "w", newline="", encoding="utf-8") if out else sys.stdout
    try:
        if rows:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)
    finally:
        if out:
            fh.close()


def _meta(args, **more):
    return {"beta": args.beta, "n": getattr(args, "n", None), "function": getattr(args, "function", None), **more}


def _approximant(args) -> OscillatoryFunction:
    if getattr(args, "expansion", None):
        doc = json.loads(Path(args.expansion).read_text(encoding="utf-8"))
        return load_approximant(doc)
    tf = get_function(args.function, args.beta)
    return approximate(tf, args.n, MobiusMap(args.beta))


def load_approximant(doc: dict) -> OscillatoryFunction:
    """Rebuild the :class:`OscillatoryFunction` written by ``ratline approx``."""
    return OscillatoryFunction.from_json_dict({"beta": doc["meta"]["beta"], "parts": doc["data"]})


def cmd_approx(args):
    g = _approximant(args)
    args.format = args.format or Path(args.out or "x.json").suffix.lstrip(".")
    if args.format == "csv":
        rows = [
            {"wavenumber": k, "j": j, "alpha_re": a.real, "alpha_im": a.imag}
            for k, e in g.parts
            for j, a in zip(e.indices.tolist(), e.coeffs)
        ]
        _emit(args, _meta(args), rows)
        return
    _emit(args, _meta(args), g.to_dict()["parts"])


def cmd_fourier(args):
    g = _approximant(args)
    ks = args.k
    cols = {"k": ks, **_split("ft", fourier_transform(g, ks))}
    if not args.expansion:
        tf = get_function(args.function, args.beta)
        if tf.exact_fourier is not None:
            cols.update(_split("exact", tf.exact_fourier(ks)))
        if args.oracle:
            cols.update(_split("oracle", [oracle_fourier(tf.handle, k) for k in ks]))
    _emit(args, _meta(args), _columns_to_rows(cols))


def cmd_cauchy(args):
    g = _approximant(args)
    if args.z is not None:
        z = args.z
        cols = {"z_re": z.real, "z_im": z.imag, **_split("cauchy", cauchy_offaxis(g, z))}
        if args.oracle:
            tf = get_function(args.function, args.beta)
            cols.update(_split("oracle", [oracle_cauchy(tf.handle, 0.0, zz) for zz in z]))
    else:
        x = args.x
        cols = {"x": x}
        for side in ("plus", "minus"):
            if args.side in (side, "both"):
                cols.update(_split(side, cauchy_apply(g, side).evaluate(x)))
    _emit(args, _meta(args), _columns_to_rows(cols))


def cmd_diff(args):
    g = _approximant(args)
    x = args.x
    cols = {"x": x, **_split("deriv", differentiate_osc(g).evaluate(x))}
    if not args.expansion:
        tf = get_function(args.function, args.beta)
        if tf.exact_derivative is not None:
            cols.update(_split("exact", tf.exact_derivative(x)))
    _emit(args, _meta(args), _columns_to_rows(cols))


def cmd_convergence(args):
    tf = get_function(args.function, args.beta)
    rep = convergence_sweep(tf, args.n, args.beta, args.xmax, args.points)
    doc = rep.to_dict()
    meta = {**doc["meta"], "xmax": args.xmax, "points": args.points}
    orders = [None] + doc["fitted_orders"]
    rows = [{**r, "fitted_order": o} for r, o in zip(doc["data"], orders)]
    _emit(args, meta, rows, {"fitted_orders": doc["fitted_orders"]})


def cmd_kernel_norms(args):
    rows = [
        {"n": int(n), "p": float(p), "order": int(o), "norm": kernel_norm(int(n), float(p), int(o))}
        for o in args.orders
        for p in args.p
        for n in args.n
    ]
    meta = {"beta": None, "n": args.n.tolist(), "function": "dirichlet_kernel"}
    _emit(args, meta, rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ratline", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_range=False):
        p.add_argument("--function", choices=sorted(FUNCTIONS), default="gaussian")
        p.add_argument("--beta", type=float, default=1.0)
        if n_range:
            p.add_argument("--n", type=_int_range, required=True)
        else:
            p.add_argument("--n", type=int, default=128)
        p.add_argument("--out")
        p.add_argument("--format", choices=("csv", "json"))

    def source(p):
        p.add_argument("--expansion", help="JSON file written by 'approx' (overrides --function)")

    p = sub.add_parser("approx", help="fit and serialise an expansion")
    common(p)
    p.set_defaults(func=cmd_approx, expansion=None)

    p = sub.add_parser("fourier", help="Fourier transform over a k-grid")
    common(p)
    source(p)
    p.add_argument("--k", type=parse_range, required=True)
    p.add_argument("--oracle", action="store_true", help="add a quadrature column")
    p.set_defaults(func=cmd_fourier)

    p = sub.add_parser("cauchy", help="Cauchy boundary values on x or values at off-axis z")
    common(p)
    source(p)
    grid = p.add_mutually_exclusive_group(required=True)
    grid.add_argument("--x", type=parse_range)
    grid.add_argument("--z", type=_complex_list)
    p.add_argument("--side", choices=("plus", "minus", "both"), default="both")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_cauchy)

    p = sub.add_parser("diff", help="evaluate the derivative of an approximant")
    common(p)
    source(p)
    p.add_argument("--x", type=parse_range, required=True)
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("convergence", help="error norms over a sweep of n")
    common(p, n_range=True)
    p.add_argument("--xmax", type=float, default=60.0)
    p.add_argument("--points", type=int, default=4001)
    p.set_defaults(func=cmd_convergence)

    p = sub.add_parser("kernel-norms", help="L^p norms of the Dirichlet kernel and its derivative")
    p.add_argument("--p", type=parse_range, default=np.array([1.0, 2.0, 4.0]))
    p.add_argument("--orders", type=_int_range, default=np.array([0, 1]))
    p.add_argument("--n", type=_int_range, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"))
    p.set_defaults(func=cmd_kernel_norms)
    return parser


_NEG_VALUE = re.compile(r"^-[\d.]")


def _attach_negative_values(argv):
    """Turn ``--k -10:10:1`` into ``--k=-10:10:1`` so argparse keeps the value."""
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a.startswith("--") and "=" not in a and i + 1 < len(argv) and _NEG_VALUE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(_attach_negative_values(argv))
    try:
        args.func(args)
    except (QuadratureError, PoleError, ValueError, OSError) as exc:
        print(f"ratline {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
