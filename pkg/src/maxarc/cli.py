"""Command-line front end.

Exit codes: 0 success, 2 validation or parameter failure, 3 I/O or parse failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Sequence, TextIO

from . import pipeline as pl
from .arcs import dual_arc, dump_arc, extract_design, load_arc
from .design import check_rank_conjecture, dump_design, incidence_matrix, load_design, rank2
from .errors import MaxArcError, ParameterError, ParseError, ValidationError
from .geometry import build_pg2, dual_plane, dump_plane
from .gf import Field
from .resolve import (
    embed,
    from_json,
    max_compatible_sets,
    parallel_classes,
    resolutions,
    to_json,
)

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 2, 3


def _hex(text: str) -> int:
    return int(text, 0) if text.lower().startswith("0x") else int(text, 16)


def _output(path: str | None) -> TextIO:
    if path in (None, "-"):
        return sys.stdout
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", encoding="utf-8")


def _emit_json(data: Any, path: str | None) -> None:
    fh = _output(path)
    try:
        json.dump(data, fh, indent=2)
        fh.write("\n")
    finally:
        if fh is not sys.stdout:
            fh.close()


def _plane(args: argparse.Namespace):
    if args.plane is None:
        if args.order is None:
            raise ParameterError("give --plane or --order")
        return build_pg2(Field.of_order(args.order, args.modulus))
    return pl.open_plane(args.plane, order=args.order, modulus=args.modulus)


def _design(path: str):
    with open(path, encoding="utf-8") as fh:
        return load_design(fh)


def _load_json(path: str) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            return from_json(json.load(fh))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from None


def cmd_build_pg(args: argparse.Namespace) -> int:
    q = args.order
    if q < 2 or q & (q - 1):
        raise ParameterError(f"unsupported order {q}: only powers of 2 can be built")
    plane = build_pg2(Field.of_order(q, args.modulus))
    fh = _output(args.out)
    try:
        dump_plane(plane, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_validate_plane(args: argparse.Namespace) -> int:
    try:
        plane = _plane(args)
    except ValidationError as exc:
        data = exc.report.to_dict() if exc.report is not None else {"valid": False}
        data["error"] = str(exc)
        _emit_json(data, args.out)
        return EXIT_INVALID
    _emit_json({"subject": plane.label, "order": plane.order, "valid": True, "violations": []}, args.out)
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    fh = _output(args.out)
    try:
        dump_plane(dual_plane(_plane(args)), fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_dual_arc(args: argparse.Namespace) -> int:
    plane = _plane(args)
    arc = pl.open_hyperoval(args.hyperoval, plane, args.k)
    fh = _output(args.out)
    try:
        dump_arc(dual_arc(plane, arc), fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    plane = _plane(args)
    if args.arc:
        with open(args.arc, encoding="utf-8") as fh:
            arc = load_arc(fh, plane, args.k)
    elif args.hyperoval:
        arc = dual_arc(plane, pl.open_hyperoval(args.hyperoval, plane, args.k))
    else:
        raise ParameterError("give --arc or --hyperoval")
    design = extract_design(arc.plane, arc)
    fh = _output(args.out)
    try:
        dump_design(design, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_rank2(args: argparse.Namespace) -> int:
    design = _design(args.design)
    out: dict[str, Any] = {"rank2": rank2(incidence_matrix(design))}
    t = args.t
    if t is None:
        # infer t from v = 2^(2t-1) - 2^(t-1), when possible
        t = next((t for t in range(2, 17) if (2 ** (2 * t - 1) - 2 ** (t - 1), 2 ** (t - 1)) == (design.v, design.k)), None)
    if t is not None:
        out["conjecture"] = check_rank_conjecture(design, t).to_dict()
    _emit_json(out, args.out)
    return EXIT_OK


def cmd_classes(args: argparse.Namespace) -> int:
    design = _design(args.design)
    _emit_json(to_json(design, parallel_classes(design, jobs=args.jobs)), args.out)
    return EXIT_OK


def cmd_resolutions(args: argparse.Namespace) -> int:
    design = _design(args.design)
    classes = _load_json(args.classes)["parallel_classes"]
    _emit_json(to_json(design, classes, resolutions(design, classes, jobs=args.jobs)), args.out)
    return EXIT_OK


def cmd_compatible(args: argparse.Namespace) -> int:
    design = _design(args.design)
    data = _load_json(args.resolutions)
    classes, res = data["parallel_classes"], data["resolutions"]
    sets = max_compatible_sets(design, res, classes, jobs=args.jobs)
    _emit_json(to_json(design, classes, res, sets), args.out)
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    design = _design(args.design)
    data = _load_json(args.compatible)
    sets = data.get("compatible_sets") or []
    if not sets:
        raise ParameterError("no compatible set of maximum size to embed")
    plane = embed(design, sets[args.index], data["resolutions"], data["parallel_classes"])
    fh = _output(args.out)
    try:
        dump_plane(plane, fh)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    plane = _plane(args)
    hyperoval = pl.open_hyperoval(args.hyperoval, plane)
    result = pl.run_pipeline(
        plane, hyperoval,
        hyperoval_id=args.hyperoval_id or Path(args.hyperoval).stem,
        out=args.out, jobs=args.jobs,
    )
    print(json.dumps(result.row.to_dict(), indent=2))
    return EXIT_OK if result.row.embed_valid else EXIT_INVALID


def cmd_batch(args: argparse.Namespace) -> int:
    rows = pl.run_batch(
        pl.read_manifest(args.manifest, args.data_dir), args.out, jobs=args.jobs, modulus=args.modulus
    )
    sys.stdout.write(pl.format_table(rows, args.format))
    return EXIT_OK


def cmd_histogram(args: argparse.Namespace) -> int:
    rows = [row for path in args.report for row in pl.read_table(path)]
    hist = pl.rank_histogram(rows)
    if args.format == "csv":
        sys.stdout.write("rank2,frequency\n" + "".join(f"{r},{c}\n" for r, c in hist.items()))
    else:
        print(json.dumps({str(r): c for r, c in hist.items()}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxarc",
        description="Maximal arcs, resolvable Steiner designs and projective planes of even order.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, *, plane: bool = False, jobs: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        if plane:
            p.add_argument("--plane", help="lines-format plane file, or PG(2,q)")
            p.add_argument("--order", type=int, help="plane order (inferred from the file if omitted)")
        if plane or name == "batch":
            p.add_argument("--modulus", type=_hex, help="field modulus as hex bits, e.g. 0x13")
        if jobs:
            p.add_argument("--jobs", type=int, default=1, help="worker processes for clique search")
        p.add_argument("--out", help="output path (default: stdout)")
        return p

    p = add("build-pg", cmd_build_pg, "emit the canonical PG(2,q) in lines format")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--modulus", type=_hex, help="field modulus as hex bits, e.g. 0x13")

    add("validate-plane", cmd_validate_plane, "check the projective-plane axioms", plane=True)
    add("dual", cmd_dual, "emit the dual plane", plane=True)

    p = add("dual-arc", cmd_dual_arc, "lines missing a maximal arc, as an arc of the dual plane", plane=True)
    p.add_argument("--hyperoval", required=True, help="arc file or 'regular'")
    p.add_argument("--k", type=int, default=2, help="arc degree (2 for hyperovals)")

    p = add("extract", cmd_extract, "Steiner design cut out by an arc", plane=True)
    p.add_argument("--arc", help="arc file in this plane")
    p.add_argument("--hyperoval", help="arc file or 'regular'; the design comes from its dual arc")
    p.add_argument("--k", type=int, default=2)

    p = add("rank2", cmd_rank2, "2-rank of a design, with the 3^t - 2^t comparison")
    p.add_argument("--design", required=True)
    p.add_argument("--t", type=int)

    p = add("classes", cmd_classes, "all parallel classes", jobs=True)
    p.add_argument("--design", required=True)

    p = add("resolutions", cmd_resolutions, "all resolutions", jobs=True)
    p.add_argument("--design", required=True)
    p.add_argument("--classes", required=True, help="JSON from 'classes'")

    p = add("compatible", cmd_compatible, "all compatible sets of maximum size", jobs=True)
    p.add_argument("--design", required=True)
    p.add_argument("--resolutions", required=True, help="JSON from 'resolutions'")

    p = add("embed", cmd_embed, "projective plane from a maximum compatible set")
    p.add_argument("--design", required=True)
    p.add_argument("--compatible", required=True, help="JSON from 'compatible'")
    p.add_argument("--index", type=int, default=0, help="which compatible set to use")

    p = add("pipeline", cmd_pipeline, "run every stage for one hyperoval", plane=True, jobs=True)
    p.add_argument("--hyperoval", required=True, help="arc file or 'regular'")
    p.add_argument("--hyperoval-id")

    p = add("batch", cmd_batch, "run the pipeline over a manifest", jobs=True)
    p.add_argument("--manifest", required=True)
    p.add_argument("--data-dir", help=f"base for relative paths (default ${pl.DATA_ENV})")
    p.add_argument("--format", choices=("json", "csv"), default="csv")

    p = sub.add_parser("histogram", help="2-rank frequencies of report tables")
    p.set_defaults(func=cmd_histogram)
    p.add_argument("report", nargs="+", help="report.json or report.csv")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MaxArcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
