"""Command-line front end.

Subcommands: classify, hammock, dvec, decompose, rep-hom, verify,
export-dot.  All results go to stdout (JSON, CSV or DOT); optional
figures are written to files.  Errors go to stderr with exit code 2 for
bad input, 3 for a computation outside the supported regime, and 1 for a
failed verification suite.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .classify import classify_grid
from .config import TubeConfig, validate_config
from .coords import TubeCoord, normalize
from .decompose import d_vector, decompose, diamond_cells
from .dimvec import DimVector, dim_vector
from .errors import (
    CalibrationError,
    ConsistencyFailure,
    NotInD,
    PreconditionViolation,
    TubecalcError,
    UnsupportedConfiguration,
)
from .hom import hammock
from .replab import build_representation, hom_dim_reps, parse_coloured_quiver
from .verify import SUITES, run_suite


def load_config(path: str) -> TubeConfig:
    with open(path) as fh:
        raw = json.load(fh)
    try:
        rank = raw["r"]
        coords = [(c["i"], c["l"]) for c in raw.get("tauT", [])]
        labels = raw.get("preprojective", [])
    except (TypeError, KeyError) as exc:
        raise ValueError(f"malformed config file {path}: missing {exc}") from None
    return validate_config(rank, coords, labels)


def parse_coord(text: str) -> TubeCoord:
    try:
        i, l = (int(w) for w in text.split(","))
    except ValueError:
        raise ValueError(f"expected a coordinate like '2,1', got {text!r}") from None
    return TubeCoord(i, l)


def label_str(label) -> str:
    if isinstance(label, TubeCoord):
        return f"T({label.i},{label.l})"
    return str(label)


def vector_payload(vec: DimVector) -> dict:
    return {
        "entries": [{"label": label_str(k), "value": v} for k, v in vec.entries],
        "partial": vec.partial,
    }


# -- classify ----------------------------------------------------------------


def _grid_rows(config: TubeConfig, max_ql: int):
    for rec in classify_grid(config, max_ql):
        yield {
            "i": rec.coord.i,
            "ql": rec.coord.l,
            "deleted": rec.deleted,
            "tau_rigid": rec.tau_rigid,
            "rigid": rec.rigid,
            "schurian": rec.schurian,
            "strongly_schurian": rec.strongly_schurian,
            "symbol": rec.symbol(),
        }


def grid_dot(config: TubeConfig, max_ql: int) -> str:
    records = classify_grid(config, max_ql)
    shape_for = {"circle": "circle", "square": "square"}
    out = ["digraph tube {", "  rankdir=BT;"]
    for rec in records:
        name = f"m_{rec.coord.i}_{rec.coord.l}"
        label = f"({rec.coord.i},{rec.coord.l})"
        if rec.deleted:
            out.append(f'  {name} [shape=none, label="x {label}"];')
            continue
        fill, shape = rec.symbol().split("-")
        font = "white" if fill == "black" else "black"
        out.append(
            f'  {name} [shape={shape_for[shape]}, style=filled, '
            f'fillcolor="{fill}", fontcolor="{font}", label="{label}"];'
        )
    r = config.rank
    for l in range(1, max_ql + 1):
        for i in range(r):
            if l + 1 <= max_ql:
                out.append(f"  m_{i}_{l} -> m_{i}_{l + 1};")
            if l >= 2:
                down = normalize(i + 1, l - 1, r)
                out.append(f"  m_{i}_{l} -> m_{down.i}_{down.l};")
    out.append("}")
    return "\n".join(out) + "\n"


def cmd_classify(args) -> int:
    config = load_config(args.config)
    if args.max_ql is None:
        args.max_ql = 2 * config.rank
    if args.format == "dot":
        sys.stdout.write(grid_dot(config, args.max_ql))
    elif args.format == "json":
        print(json.dumps(list(_grid_rows(config, args.max_ql)), indent=2))
    else:
        _print_csv(
            ["i", "ql", "deleted", "tau_rigid", "rigid", "schurian", "strongly_schurian", "symbol"],
            _grid_rows(config, args.max_ql),
        )
    if args.figure:
        from .plotting import render_grid

        render_grid(classify_grid(config, args.max_ql), config.rank, args.figure)
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


def cmd_export_dot(args) -> int:
    config = load_config(args.config)
    if args.max_ql is None:
        args.max_ql = 2 * config.rank
    sys.stdout.write(grid_dot(config, args.max_ql))
    return 0


# -- hammock -----------------------------------------------------------------


def cmd_hammock(args) -> int:
    if args.config:
        rank = load_config(args.config).rank
    elif args.rank:
        rank = args.rank
    else:
        raise ValueError("hammock needs --config or --rank")
    if args.max_ql is None:
        args.max_ql = 3 * rank
    source = parse_coord(args.source)
    if source.l < 1:
        raise ValueError("hammock source must have quasilength >= 1")
    source = normalize(source.i, source.l, rank)
    table = hammock(rank, source, args.max_ql)
    rows = (
        {"i": c.i, "ql": c.l, "dim": v}
        for c, v in sorted(table.entries.items(), key=lambda kv: (kv[0].l, kv[0].i))
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "rank": rank,
                    "source": {"i": source.i, "l": source.l},
                    "max_ql": args.max_ql,
                    "cells": list(rows),
                },
                indent=2,
            )
        )
    else:
        _print_csv(["i", "ql", "dim"], rows)
    if args.figure:
        from .plotting import render_hammock

        render_hammock(table, args.figure, title=f"Hom({source}, -), rank {rank}")
        print(f"figure written to {args.figure}", file=sys.stderr)
    return 0


# -- dimension and denominator vectors ---------------------------------------


def cmd_dvec(args) -> int:
    config = load_config(args.config)
    m = normalize(*_coord_pair(args.coord), config.rank)
    dprime = dim_vector(config, m)
    payload = {
        "coord": {"i": m.i, "l": m.l},
        "dimension_vector": vector_payload(dprime),
        "d_vector": vector_payload(d_vector(config, m)),
    }
    if args.format == "csv":
        rows = (
            {"label": label_str(k), "dimension_vector": v, "d_vector": w}
            for (k, v), (_, w) in zip(dprime.entries, d_vector(config, m).entries)
        )
        _print_csv(["label", "dimension_vector", "d_vector"], rows)
    else:
        print(json.dumps(payload, indent=2))
    return 0


def _certificate_payload(config: TubeConfig, m: TubeCoord) -> dict:
    cert = decompose(config, m)
    return {
        "m": {"i": cert.m.i, "l": cert.m.l},
        "parts": [
            {
                "coord": {"i": c.i, "l": c.l},
                "tau_rigid": rec.tau_rigid,
                "rigid": rec.rigid,
                "vector": vector_payload(vec),
            }
            for c, vec, rec in cert.parts
        ],
        "delta_applied": cert.delta_applied,
        "lhs": vector_payload(cert.lhs),
        "rhs_sum": vector_payload(cert.rhs_sum),
        "verified": cert.lhs.entries == cert.rhs_sum.entries,
    }


def cmd_decompose(args) -> int:
    config = load_config(args.config)
    if args.all:
        payload = [_certificate_payload(config, m) for m in diamond_cells(config)]
    else:
        if not args.coord:
            raise ValueError("decompose needs --coord or --all")
        m = normalize(*_coord_pair(args.coord), config.rank)
        payload = _certificate_payload(config, m)
    print(json.dumps(payload, indent=2))
    return 0


def _coord_pair(text: str) -> tuple[int, int]:
    c = parse_coord(text)
    return c.i, c.l


# -- representation hom ------------------------------------------------------


def cmd_rep_hom(args) -> int:
    paths = args.module
    if len(paths) == 1:
        paths = [paths[0], paths[0]]
    if len(paths) != 2:
        raise ValueError("rep-hom takes one or two --module files")
    reps = []
    for path in paths:
        with open(path) as fh:
            reps.append(build_representation(parse_coloured_quiver(fh.read())))
    dim = hom_dim_reps(reps[0], reps[1])
    print(json.dumps({"source": paths[0], "target": paths[1], "hom_dim": dim}))
    return 0


# -- verify --------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        results = run_suite(args.suite, seed=args.seed)
    except KeyError:
        raise ValueError(
            f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all"
        ) from None
    for res in results:
        print(res.line())
    return 0 if all(res.ok for res in results) else 1


# -- plumbing ------------------------------------------------------------------


def _print_csv(fieldnames, rows):
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fieldnames)
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_value(row.get(k)) for k in fieldnames})
    sys.stdout.write(buf.getvalue())


def _csv_value(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tubecalc",
        description="Tube combinatorics for cluster categories of tame type",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification grid for a configuration")
    p.add_argument("--config", required=True, help="configuration JSON file")
    p.add_argument("--max-ql", type=int, default=None, help="rows to classify (default 2r)")
    p.add_argument("--format", choices=("json", "csv", "dot"), default="csv")
    p.add_argument("--figure", help="also render the grid to this image file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("hammock", help="Hom dimensions from a fixed source")
    p.add_argument("--config", help="configuration JSON file (for the rank)")
    p.add_argument("--rank", type=int, help="tube rank, if no config given")
    p.add_argument("--source", required=True, help="source coordinate 'i,l'")
    p.add_argument("--max-ql", type=int, default=None, help="rows to tabulate (default 3r)")
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--figure", help="also render the hammock to this image file")
    p.set_defaults(func=cmd_hammock)

    p = sub.add_parser("dvec", help="dimension and denominator vectors of a cell")
    p.add_argument("--config", required=True)
    p.add_argument("--coord", required=True, help="cell coordinate 'i,l'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_dvec)

    p = sub.add_parser("decompose", help="three-part decomposition certificates")
    p.add_argument("--config", required=True)
    p.add_argument("--coord", help="cell coordinate 'i,l'")
    p.add_argument("--all", action="store_true", help="decompose every cell of D")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("rep-hom", help="Hom dimension between coloured-quiver modules")
    p.add_argument("--module", action="append", required=True, help="coloured-quiver file (repeatable)")
    p.set_defaults(func=cmd_rep_hom)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)} or all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="classification grid as DOT")
    p.add_argument("--config", required=True)
    p.add_argument("--max-ql", type=int, default=None)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_ql", None) is not None and args.max_ql < 1:
        print("error: --max-ql must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UnsupportedConfiguration, NotInD, PreconditionViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ConsistencyFailure, CalibrationError) as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return 1
    except (TubecalcError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
