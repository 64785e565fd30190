"""Command line front end.

Exit status: 0 when the output was produced and verifies, 1 when a
verification (or a construction precondition) fails, 2 for usage errors.
Errors are written to stderr as a JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import serialize
from .cycles import cycle_d_divisible
from .decompose import certificate, decompose
from .errors import LabelingError
from .graphs import build_caterpillar, build_hairy_cycle
from .hairy import corona_d_divisible, odd_alpha_hairy
from .labeling import (
    Labeling,
    caterpillar_d_divisible,
    divisible_label_set,
    verify_alpha_s,
    verify_d_divisible,
)
from .oracle import MAX_VERTICES, search_labelings
from .transforms import TransformRequest, apply_transform

USAGE_ERRORS = {
    "invalid-spec",
    "invalid-request",
    "not-admissible",
    "size-mismatch",
    "wrong-kind",
    "non-bipartite-unsupported",
    "out-of-domain",
    "invalid-top",
    "search-budget-exceeded",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> Any:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return serialize.loads(text)


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(obj: Any, args) -> None:
    _write(serialize.dumps(obj), getattr(args, "output", None))


# -- subcommands -------------------------------------------------------------------

def _construct(args) -> int:
    if args.family == "caterpillar":
        l = caterpillar_d_divisible(build_caterpillar(args.pendants), args.d)
        d = args.d
    elif args.family == "hairy":
        g = build_hairy_cycle(args.pendants)
        l = odd_alpha_hairy(g, route=args.route)
        d = g.size
    elif args.family == "corona":
        l = corona_d_divisible(args.t, args.lam, args.d)
        d = args.d
    else:
        if args.edges % 4:
            raise LabelingError("invalid-spec", f"only cycles C_4k are supported, got C_{args.edges}")
        l = cycle_d_divisible(args.edges // 4, args.d, args.c)
        d = args.d
    report = verify_d_divisible(l, d, require_alpha=True)
    _emit(serialize.labeling_to_dict(l), args)
    if not report.holds:
        _error({"error": "verification-failed", "failures": report.failures})
        return 1
    return 0


def _load_labeling(path: str) -> Labeling:
    return serialize.labeling_from_dict(_read(path))


def _transform(args) -> int:
    l = _load_labeling(args.labeling)
    r = TransformRequest(args.op, args.s, args.j)
    out = apply_transform(l, r)
    report = verify_alpha_s(out, sorted(l.edge_differences))
    _emit(serialize.labeling_to_dict(out), args)
    if not report.holds:
        _error({"error": "verification-failed", "failures": report.failures})
        return 1
    return 0


def _decompose(args) -> int:
    l = _load_labeling(args.labeling)
    d = args.d if args.d is not None else l.d
    if d is None:
        raise UsageError("the labeling records no d; pass --d")
    dec = decompose(l, args.n, d, materialize=not args.no_materialize)
    status = 0
    if args.verify or args.no_materialize:
        dec.certificate = certificate(dec, l.host)
        status = 0 if dec.certificate["holds"] else 1
    _emit(serialize.decomposition_to_dict(dec), args)
    return status


def _verify(args) -> int:
    l = _load_labeling(args.input)
    d = args.d if args.d is not None else l.d
    if d is None:
        raise UsageError("the labeling records no d; pass --d")
    report = verify_d_divisible(l, d, require_alpha=args.alpha)
    out = report.to_dict()
    out.update({"d": d, "alpha": args.alpha, "provenance": l.provenance})
    _emit(out, args)
    return 0 if report.holds else 1


def _search(args) -> int:
    data = _read(args.graph)
    if isinstance(data, dict) and "values" in data:
        data = data["graph"]
    g = serialize.graph_from_dict(data)
    s = divisible_label_set(g.size, args.d)
    found = search_labelings(g, s, args.alpha, args.limit, args.max_vertices)
    found = [l.replace(l.values, d=args.d) for l in found]
    _emit([serialize.labeling_to_dict(l) for l in found], args)
    return 0 if found else 1


def _export(args) -> int:
    data = _read(args.input)
    if not isinstance(data, dict):
        raise UsageError("expected a JSON object")
    if "baseBlocks" in data:
        if args.format != "json":
            raise UsageError("decompositions export only as json")
        _write(serialize.dumps(serialize.decomposition_to_dict(serialize.decomposition_from_dict(data))), args.output)
    elif "values" in data:
        l = serialize.labeling_from_dict(data)
        if args.format == "dot":
            _write(serialize.to_dot(l.host, l), args.output)
        elif args.format == "graph":
            _write(serialize.dumps(serialize.graph_to_dict(l.host)), args.output)
        else:
            _write(serialize.dumps(serialize.labeling_to_dict(l)), args.output)
    else:
        g = serialize.graph_from_dict(data)
        if args.format == "dot":
            _write(serialize.to_dot(g), args.output)
        else:
            _write(serialize.dumps(serialize.graph_to_dict(g)), args.output)
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="divgraceful", description="d-divisible alpha-labelings and cyclic decompositions")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    con = sub.add_parser("construct", help="build a labeling")
    fam = con.add_subparsers(dest="family", required=True, parser_class=_Parser)
    cat = fam.add_parser("caterpillar", help="standard labeling of C[n_1, m_1, ...]")
    cat.add_argument("--pendants", type=_int_list, required=True, help="e.g. 1,2,0,1")
    cat.add_argument("--d", type=int, required=True)
    hc = fam.add_parser("hairy", help="odd alpha-labeling of a bipartite hairy cycle")
    hc.add_argument("--pendants", type=_int_list, required=True)
    hc.add_argument("--route", choices=("closed-form", "transforms"), default="closed-form")
    cor = fam.add_parser("corona", help="d-divisible alpha-labeling of H(2t, lambda)")
    cor.add_argument("--t", type=int, required=True)
    cor.add_argument("--lambda", dest="lam", type=int, required=True)
    cor.add_argument("--d", type=int, required=True)
    cyc = fam.add_parser("cycle", help="d-divisible alpha-labeling of C_4k")
    cyc.add_argument("--edges", type=int, required=True, help="cycle length 4k")
    cyc.add_argument("--d", type=int, required=True)
    cyc.add_argument("--c", type=int, default=None, help="closing difference (default: smallest valid)")
    for q in (cat, hc, cor, cyc):
        q.add_argument("-o", "--output")
        q.set_defaults(func=_construct)

    tr = sub.add_parser("transform", help="apply one rewriting operation to a caterpillar labeling")
    tr.add_argument("--labeling", default="-")
    tr.add_argument("--op", required=True, choices=("O1", "O2", "O3", "O4", "O5", "O5_4"))
    tr.add_argument("--s", type=int)
    tr.add_argument("--j", type=int)
    tr.add_argument("-o", "--output")
    tr.set_defaults(func=_transform)

    de = sub.add_parser("decompose", help="develop a labeling into a cyclic decomposition")
    de.add_argument("--labeling", default="-")
    de.add_argument("--n", type=int, default=1)
    de.add_argument("--d", type=int)
    de.add_argument("--verify", action="store_true")
    de.add_argument("--no-materialize", action="store_true")
    de.add_argument("-o", "--output")
    de.set_defaults(func=_decompose)

    ve = sub.add_parser("verify", help="check a labeling")
    ve.add_argument("input", nargs="?", default="-")
    ve.add_argument("--d", type=int)
    ve.add_argument("--alpha", action="store_true")
    ve.add_argument("-o", "--output")
    ve.set_defaults(func=_verify)

    se = sub.add_parser("search", help="exhaustive search on a small graph")
    se.add_argument("--graph", required=True)
    se.add_argument("--d", type=int, required=True)
    se.add_argument("--alpha", action="store_true")
    se.add_argument("--limit", type=int, default=1)
    se.add_argument("--max-vertices", type=int, default=MAX_VERTICES)
    se.add_argument("-o", "--output")
    se.set_defaults(func=_search)

    ex = sub.add_parser("export", help="re-serialize JSON or convert to DOT")
    ex.add_argument("input", nargs="?", default="-")
    ex.add_argument("--format", choices=("json", "dot", "graph"), default="json")
    ex.add_argument("-o", "--output")
    ex.set_defaults(func=_export)
    return p


def _error(obj: dict) -> None:
    sys.stderr.write(json.dumps(obj, sort_keys=True) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        _error({"error": "usage", "message": str(exc)})
        return 2
    except LabelingError as exc:
        _error(exc.to_dict())
        return 2 if exc.code in USAGE_ERRORS else 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
