"""Command-line surface for module construction, measures, scans, and suites.

Exit codes: 0 success, 1 verification failure, 2 input error,
3 enumeration cap exceeded or splitting undecided, 4 precondition
violation (for example, translating a projective).
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import Caps, DEFAULT_CAPS
from .engine import MeasureStore, gr_measure_oracle
from .errors import CapExceeded, PreconditionError, Undecided
from .measure import format_measure, parse_measure
from .modules import (
    KroneckerModule,
    embed2k,
    ext_dim,
    hom_dim,
    p_module,
    preinj2k,
    preproj2k,
    q_module,
    regular2k,
    regular2k_inf,
    simple_module,
    tau_inverse_module,
    tau_module,
)
from . import dimvec
from .scan import CatalogBuilder, catalog_to_csv, gap_scan
from .verify import SUITES, get_builder, run_suite


def _add_caps_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cap-submodule-length", type=int, default=None)
    parser.add_argument("--cap-subspace-points", type=int, default=None)
    parser.add_argument("--cap-idempotent-points", type=int, default=None)
    parser.add_argument("--cap-hom-scan-points", type=int, default=None)
    parser.add_argument("--cap-exhaustive-tuples", type=int, default=None)
    parser.add_argument("--cap-oracle-length", type=int, default=None)


def _caps_from(args) -> Caps:
    fields = {
        "submodule_length": args.cap_submodule_length,
        "subspace_points": args.cap_subspace_points,
        "idempotent_points": args.cap_idempotent_points,
        "hom_scan_points": args.cap_hom_scan_points,
        "exhaustive_tuples": args.cap_exhaustive_tuples,
        "oracle_length": args.cap_oracle_length,
    }
    overrides = {k: v for k, v in fields.items() if v is not None}
    if not overrides:
        return DEFAULT_CAPS
    base = {k: getattr(DEFAULT_CAPS, k) for k in fields}
    base.update(overrides)
    return Caps(**base)


def _load_module(path: str) -> KroneckerModule:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return KroneckerModule.from_dict(data)


def _dump_module(mod: KroneckerModule, path: str | None) -> None:
    text = json.dumps(mod.to_dict())
    if path is None:
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_measure(args) -> int:
    caps = _caps_from(args)
    mod = _load_module(args.module)
    store = MeasureStore(caps)
    mu = store.measure(mod)
    print(format_measure(mu))
    if args.oracle:
        om = gr_measure_oracle(mod, caps)
        if om != mu:
            print(f"oracle disagrees: {format_measure(om)}", file=sys.stderr)
            return 1
        print(f"oracle agrees: {format_measure(om)}")
    if args.chain:
        chain = store.witness_chain(mod)
        for u1, u2 in chain:
            print(f"  length {u1.dim + u2.dim}: dims ({u1.dim},{u2.dim})")
    if args.gr_submodules:
        for u1, u2 in store.gr_submodule_pairs(mod):
            print(f"  gr submodule dims ({u1.dim},{u2.dim})")
    return 0


_KINDS = ("p", "q", "simple", "regular2k", "regular2k-inf", "preproj2k", "preinj2k")


def _cmd_make(args) -> int:
    n, q = args.n, args.q
    kind = args.kind
    params = args.params
    def one_param(name):
        if len(params) != 1:
            raise ValueError(f"{kind} takes exactly one parameter ({name})")
        return int(params[0])

    if kind == "p":
        mod = p_module(n, q, one_param("index"))
    elif kind == "q":
        mod = q_module(n, q, one_param("index"))
    elif kind == "simple":
        if params not in (["1"], ["2"]):
            raise ValueError("simple takes vertex 1 (source) or 2 (sink)")
        mod = simple_module(n, q, int(params[0]))
    elif kind in ("regular2k", "regular2k-inf", "preproj2k", "preinj2k"):
        if kind == "regular2k":
            if len(params) != 2:
                raise ValueError("regular2k takes size and eigenvalue (or inf)")
            m = int(params[0])
            lam = params[1]
            flat = regular2k_inf(m, q) if lam in ("inf", "oo") else regular2k(m, q, int(lam))
        elif kind == "regular2k-inf":
            flat = regular2k_inf(one_param("size"), q)
        elif kind == "preproj2k":
            flat = preproj2k(one_param("size"), q)
        else:
            flat = preinj2k(one_param("size"), q)
        mod = embed2k(flat, n) if n > 2 else flat
    else:
        raise ValueError(f"unknown kind {kind!r}")
    _dump_module(mod, args.out)
    return 0


def _cmd_compare(args) -> int:
    i = parse_measure(args.left)
    j = parse_measure(args.right)
    print("<" if i < j else ">" if i > j else "=")
    return 0


def _cmd_tau(args) -> int:
    mod = _load_module(args.module)
    out = tau_inverse_module(mod) if args.inverse else tau_module(mod)
    _dump_module(out, args.out)
    return 0


def _cmd_hom(args) -> int:
    x = _load_module(args.x)
    y = _load_module(args.y)
    h = hom_dim(x, y)
    e = ext_dim(x, y)
    form = dimvec.euler_form(x.dim, y.dim, x.n)
    status = "OK" if h - e == form else "MISMATCH"
    print(f"hom={h} ext={e} euler={form} {status}")
    return 0 if status == "OK" else 1


def _cmd_scan(args) -> int:
    caps = _caps_from(args)
    builder = CatalogBuilder(args.n, args.q, caps)
    if args.mode == "exhaustive":
        result = builder.catalog(args.max_length, 0, args.threads)
    elif args.mode == "families":
        result = builder.catalog(0, args.max_length, args.threads)
    else:
        records = builder.sampled(args.max_length, args.samples, args.seed)
        from .scan import CatalogResult

        result = CatalogResult(args.n, args.q, args.max_length, 0, records, [])
    text = catalog_to_csv(result)
    if args.out is None:
        print(text, end="")
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def _cmd_gapscan(args) -> int:
    caps = _caps_from(args)
    builder = get_builder(3, args.q, caps)
    report = gap_scan(
        3, args.q, args.m, args.max_length, args.family_length,
        caps=caps, builder=builder, threads=args.threads,
    )
    print(json.dumps(report, indent=2))
    bad = report["unwitnessed"] or report["violations_between"] or report["violations_above"]
    return 1 if bad else 0


def _cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    params = {
        "seed": args.seed,
        "threads": args.threads,
        "m": args.m,
        "q": args.q,
        "samples": args.samples,
    }
    params = {k: v for k, v in params.items() if v is not None}
    ok = True
    for name in names:
        result = run_suite(name, **params)
        print(result.summary())
        ok = ok and result.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kronq",
        description="Exact Gabriel-Roiter measure toolkit for n-arrow Kronecker"
        " representations over small prime fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="print the measure of a module file")
    p.add_argument("module")
    p.add_argument("--chain", action="store_true", help="print one realizing chain")
    p.add_argument("--gr-submodules", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-run the brute-force oracle")
    _add_caps_args(p)
    p.set_defaults(fn=_cmd_measure)

    p = sub.add_parser("make", help="write a constructed module as JSON")
    p.add_argument("kind", choices=_KINDS)
    p.add_argument("params", nargs="*")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_make)

    p = sub.add_parser("compare", help="compare two measures in brace format")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_compare)

    p = sub.add_parser("tau", help="translate a module file")
    p.add_argument("module")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_tau)

    p = sub.add_parser("hom", help="hom and ext dimensions with the form check")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=_cmd_hom)

    p = sub.add_parser("scan", help="catalog indecomposables as CSV")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--max-length", type=int, default=4)
    p.add_argument("--mode", choices=("exhaustive", "sampled", "families"), default="exhaustive")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=20260819)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--out", default=None)
    _add_caps_args(p)
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("gapscan", help="witness report around an upper measure")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--max-length", type=int, default=7)
    p.add_argument("--family-length", type=int, default=9)
    p.add_argument("--threads", type=int, default=1)
    _add_caps_args(p)
    p.set_defaults(fn=_cmd_gapscan)

    p = sub.add_parser("verify", help="run a named suite (or all)")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4
    except (CapExceeded, Undecided) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
