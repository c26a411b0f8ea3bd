"""Command-line front end.

    hopfkit build group-algebra|function-algebra|double <file.grp> [-o out.hopf]
    hopfkit build tensor <a.hopf> <b.hopf> [-o out.hopf]
    hopfkit check-axioms <file.hopf>
    hopfkit integrals <file.hopf>
    hopfkit wedderburn <file.hopf> [--cyclotomic N] [--seed s]
    hopfkit characters <file.hopf> [--json]
    hopfkit verify <file.hopf> [--suite <name>|all] [--json]
    hopfkit report <file.grp|file.hopf> [--as <kind>] [--json]

Exit codes: 0 success, 1 verification failure (or a semantic error such as a
non-semisimple input), 2 usage or parse error.  Scalars in files and reports
always use the exact literal grammar; identical inputs and seed give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .builders import drinfeld_double, function_algebra, group_algebra, tensor_product
from .characters import is_central_character
from .errors import HopfkitError, ParseError
from .groups import parse_group
from .hopf import HopfData, format_hopf, format_vector, parse_hopf
from .integrals import integrals_report
from .pipeline import SUITES, Pipeline
from .scalars import format_scalar
from .wedderburn import blocks_report

_BUILD_KINDS = ("group-algebra", "function-algebra", "double", "tensor")


@dataclass(frozen=True)
class SessionConfig:
    """One invocation's knobs: splitting-field order (None = derive from the
    input), deterministic seed, output format, and output path."""

    cyclotomic: int | None = None
    seed: int = 0
    json: bool = False
    output: str | None = None

    @classmethod
    def from_args(cls, args) -> "SessionConfig":
        cfg = cls(
            cyclotomic=getattr(args, "cyclotomic", None),
            seed=getattr(args, "seed", 0),
            json=getattr(args, "json", False),
            output=getattr(args, "output", None),
        )
        if cfg.cyclotomic is not None and cfg.cyclotomic < 1:
            raise ParseError("--cyclotomic must be >= 1")
        return cfg


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfkit",
        description="Exact verification toolkit for finite-dimensional semisimple Hopf algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="construct a .hopf file from group data")
    build.add_argument("kind", choices=_BUILD_KINDS)
    build.add_argument("inputs", nargs="+", help=".grp file (or two .hopf files for tensor)")
    build.add_argument("-o", "--output", help="output .hopf path (default: stdout)")

    for name, help_text in (
        ("check-axioms", "verify the Hopf axioms of a .hopf file"),
        ("integrals", "compute and certify the integral pair"),
        ("wedderburn", "compute the block decomposition"),
        ("characters", "compute the character table and fusion ring"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help=".hopf file")
        p.add_argument("--cyclotomic", type=int, default=None, metavar="N",
                       help="cyclotomic order of the splitting field (default: from the file)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--json", action="store_true")
        p.add_argument("-o", "--output", help="write output to this path instead of stdout")

    verify = sub.add_parser("verify", help="run verification suites")
    verify.add_argument("input", help=".hopf file")
    verify.add_argument("--suite", default="all", choices=SUITES + ("all",))
    verify.add_argument("--cyclotomic", type=int, default=None, metavar="N")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--json", action="store_true")
    verify.add_argument("-o", "--output")

    report = sub.add_parser("report", help="run every suite and emit one document")
    report.add_argument("input", help=".grp or .hopf file")
    report.add_argument("--as", dest="build_as", default=None,
                        choices=("group-algebra", "function-algebra", "double"),
                        help="how to build a Hopf algebra from a .grp input")
    report.add_argument("--cyclotomic", type=int, default=None, metavar="N")
    report.add_argument("--seed", type=int, default=0)
    report.add_argument("--json", action="store_true")
    report.add_argument("-o", "--output")

    return parser


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load_hopf(path: str) -> HopfData:
    return parse_hopf(Path(path).read_text())


def _load_algebra(path: str, build_as: str | None) -> HopfData:
    if path.endswith(".grp"):
        if build_as is None:
            raise ParseError(f"{path} is a group file; choose --as group-algebra|function-algebra|double")
        group = parse_group(Path(path).read_text())
        builder = {
            "group-algebra": group_algebra,
            "function-algebra": function_algebra,
            "double": drinfeld_double,
        }[build_as]
        return builder(group)
    return _load_hopf(path)


def _cmd_build(args) -> int:
    if args.kind == "tensor":
        if len(args.inputs) != 2:
            raise ParseError("build tensor needs exactly two .hopf inputs")
        h = tensor_product(_load_hopf(args.inputs[0]), _load_hopf(args.inputs[1]))
    else:
        if len(args.inputs) != 1:
            raise ParseError(f"build {args.kind} needs exactly one .grp input")
        group = parse_group(Path(args.inputs[0]).read_text())
        builder = {
            "group-algebra": group_algebra,
            "function-algebra": function_algebra,
            "double": drinfeld_double,
        }[args.kind]
        h = builder(group)
    _emit(format_hopf(h), args.output)
    return 0


def _cmd_check_axioms(args) -> int:
    cfg = SessionConfig.from_args(args)
    pipe = Pipeline(_load_hopf(args.input), order=cfg.cyclotomic, seed=cfg.seed)
    rep = pipe.axioms
    if cfg.json:
        doc = {"algebra": pipe.H.name, "dim": pipe.H.dim, "suites": [rep.to_dict()], "overall": rep.overall}
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
    else:
        _emit(rep.render_text() + "\n", cfg.output)
    return 0 if rep.overall else 1


def _cmd_integrals(args) -> int:
    cfg = SessionConfig.from_args(args)
    pipe = Pipeline(_load_hopf(args.input), order=cfg.cyclotomic, seed=cfg.seed)
    p = pipe.integrals
    rep = integrals_report(pipe.H, p)
    if cfg.json:
        doc = {"algebra": pipe.H.name, "dim": pipe.H.dim, "suites": [rep.to_dict()], "overall": rep.overall}
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
        return 0 if rep.overall else 1
    lines = [
        f"integrals of {pipe.H.name} (dim {pipe.H.dim})",
        f"  lambda  = {format_vector(p.lambda_dual)}",
        f"  Lambda  = {format_vector(p.Lambda)}",
        f"  Lambda' = {format_vector(p.Lambda_scaled)}",
        rep.render_text(),
    ]
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if rep.overall else 1


def _cmd_wedderburn(args) -> int:
    cfg = SessionConfig.from_args(args)
    pipe = Pipeline(_load_hopf(args.input), order=cfg.cyclotomic, seed=cfg.seed)
    blocks = pipe.blocks
    rep = blocks_report(pipe.H, blocks)
    if cfg.json:
        doc = {"algebra": pipe.H.name, "dim": pipe.H.dim, "suites": [rep.to_dict()], "overall": rep.overall}
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
        return 0 if rep.overall else 1
    lines = [
        f"wedderburn decomposition of {pipe.H.name} (dim {pipe.H.dim}, Q(zeta_{pipe.order}))",
        f"  blocks: {blocks.count}",
        f"  degrees: {blocks.degrees}",
    ]
    for label, deg, e in zip(blocks.labels, blocks.degrees, blocks.idempotents):
        lines.append(f"  {label} (dim {deg}): e = {format_vector(e)}")
    lines.append(rep.render_text())
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if rep.overall else 1


def _cmd_characters(args) -> int:
    cfg = SessionConfig.from_args(args)
    pipe = Pipeline(_load_hopf(args.input), order=cfg.cyclotomic, seed=cfg.seed)
    table = pipe.table
    fusion = pipe.fusion
    central = [is_central_character(chi, pipe.H) for chi in table.characters]
    if cfg.json:
        doc = {
            "algebra": pipe.H.name,
            "dim": pipe.H.dim,
            "cyclotomic": pipe.order,
            "labels": table.labels,
            "degrees": table.degrees,
            "characters": [[format_scalar(c) for c in chi] for chi in table.characters],
            "central": central,
            "fusion": fusion.tensor,
            "dual_map": list(fusion.dual_map),
            "unit": fusion.unit_index,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
        return 0
    lines = [f"characters of {pipe.H.name} (dim {pipe.H.dim})"]
    for label, deg, chi, is_c in zip(table.labels, table.degrees, table.characters, central):
        lines.append(f"  chi_{label} (dim {deg}, central: {is_c}) = {format_vector(chi)}")
    lines.append(f"  duality permutation: {list(fusion.dual_map)}")
    lines.append("  fusion tensor (chi_V chi_W = sum_U n[V][W][U] chi_U):")
    for v, lv in enumerate(fusion.labels):
        for w, lw in enumerate(fusion.labels):
            terms = [
                f"{n} chi_{fusion.labels[u]}" for u, n in enumerate(fusion.tensor[v][w]) if n
            ]
            lines.append(f"    chi_{lv} chi_{lw} = " + (" + ".join(terms) if terms else "0"))
    _emit("\n".join(lines) + "\n", cfg.output)
    return 0


def _render_report(pipe: Pipeline, suites: list[str], cfg: SessionConfig) -> int:
    reports = [pipe.suite(name) for name in suites]
    overall = all(rep.overall for rep in reports if not rep.exploratory)
    if cfg.json:
        doc = {
            "algebra": pipe.H.name,
            "dim": pipe.H.dim,
            "suites": [rep.to_dict() for rep in reports],
            "overall": overall,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.output)
    else:
        lines = [f"verification of {pipe.H.name} (dim {pipe.H.dim})"]
        lines += [rep.render_text() for rep in reports]
        lines.append(f"overall: {'pass' if overall else 'FAIL'}")
        _emit("\n".join(lines) + "\n", cfg.output)
    return 0 if overall else 1


def _cmd_verify(args) -> int:
    cfg = SessionConfig.from_args(args)
    pipe = Pipeline(_load_hopf(args.input), order=cfg.cyclotomic, seed=cfg.seed)
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    return _render_report(pipe, suites, cfg)


def _cmd_report(args) -> int:
    cfg = SessionConfig.from_args(args)
    h = _load_algebra(args.input, args.build_as)
    pipe = Pipeline(h, order=cfg.cyclotomic, seed=cfg.seed)
    return _render_report(pipe, list(SUITES), cfg)


_COMMANDS = {
    "build": _cmd_build,
    "check-axioms": _cmd_check_axioms,
    "integrals": _cmd_integrals,
    "wedderburn": _cmd_wedderburn,
    "characters": _cmd_characters,
    "verify": _cmd_verify,
    "report": _cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help; normalize
        return 0 if exc.code == 0 else 2
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HopfkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
