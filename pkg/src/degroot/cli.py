"""Command-line front end: ``degroot <subcommand> [options]``.

Exit codes: 0 success, 2 parse error, 3 carrier above cap, 4 verification
failure.  The json and csv formats are stable; the table format is for people.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional, Union

from .census import (
    CENSUS_CAP,
    CSV_COLUMNS,
    canonicalize,
    census,
    csv_line,
    enumerate_preorders,
    naive_enumerate_topologies,
    preorders_by_extension,
)
from .classification import classify, dual_image_report
from .dualization import dual_power, dual_sequence
from .errors import CapExceeded, ParseError, TopologyError, VerificationFailure
from .finite import DEFAULT_MAX_N, FiniteTopology, alexandrov_from_preorder
from .laws import run_laws
from .symbolic import (
    SymbolicTopology,
    catalog,
    specialization_kind,
    symbolic_dual,
    symbolic_dual_sequence,
)
from . import symbolic

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4
CACHE_ENV = "DEGROOT_CACHE_DIR"


@dataclass(frozen=True)
class RunConfig:
    max_n: int = DEFAULT_MAX_N
    jobs: int = 1
    cache_dir: Optional[str] = None
    output_format: str = "table"
    census_max_n: int = CENSUS_CAP

    def __post_init__(self):
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")
        if not 0 <= self.max_n <= DEFAULT_MAX_N:
            raise ValueError(f"max_n must lie in 0..{DEFAULT_MAX_N}")
        if self.output_format not in ("table", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def load_config(path: Optional[str], args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if path:
        data = json.loads(Path(path).read_text())
        cfg = replace(cfg, **{k: v for k, v in data.items() if k in RunConfig.__dataclass_fields__})
    if os.environ.get(CACHE_ENV):
        cfg = replace(cfg, cache_dir=os.environ[CACHE_ENV])
    overrides = {
        "max_n": args.max_n,
        "jobs": args.jobs,
        "cache_dir": args.cache_dir,
        "output_format": args.format,
    }
    return replace(cfg, **{k: v for k, v in overrides.items() if v is not None})


Space = Union[FiniteTopology, SymbolicTopology]


def parse_input(text: str) -> Space:
    """A topology JSON literal, a path to a JSON file, or a symbolic token."""
    raw = None
    if text.lstrip().startswith("{"):
        raw = text
    elif Path(text).is_file():
        raw = Path(text).read_text()
    if raw is None:
        return symbolic.parse_symbolic(text)
    try:
        obj = json.loads(raw)
        return FiniteTopology.from_json(obj)
    except (json.JSONDecodeError, KeyError, TypeError, TopologyError, ValueError) as exc:
        raise ParseError(f"bad topology JSON: {exc}") from None


def _check_cap(space: Space, cfg: RunConfig):
    if isinstance(space, FiniteTopology) and space.n > cfg.max_n:
        raise CapExceeded(f"carrier of {space.n} points above cap {cfg.max_n}")


def _render(space: Space):
    return space.to_json() if isinstance(space, FiniteTopology) else str(space)


def _show(space: Space) -> str:
    if isinstance(space, FiniteTopology):
        return json.dumps(space.to_json(), separators=(",", ":"))
    return str(space)


def _sequence(space: Space):
    if isinstance(space, FiniteTopology):
        seq = dual_sequence(space)
        return seq, classify(seq)
    return symbolic_dual_sequence(space)


def cmd_dual(args, cfg: RunConfig) -> int:
    space = parse_input(args.input)
    _check_cap(space, cfg)
    if not 0 <= args.power <= 6:
        raise ParseError("power must lie in 0..6")
    if isinstance(space, FiniteTopology):
        result: Space = dual_power(space, args.power)
    else:
        result = space
        for _ in range(args.power):
            result = symbolic_dual(result)
    seq, _ = _sequence(space)
    if cfg.output_format == "json":
        print(json.dumps({
            "power": args.power,
            "result": _render(result),
            "sequence": [_render(s) for s in seq.stages],
            "distinct_count": seq.distinct_count,
        }, sort_keys=True))
    elif cfg.output_format == "csv":
        out = csv.writer(sys.stdout, lineterminator="\n")
        out.writerow(["power", "result", "distinct_count"])
        out.writerow([args.power, _show(result), seq.distinct_count])
    else:
        print(_show(result))
        for k, s in enumerate(seq.stages):
            print(f"  d^{k}: {_show(s)}")
        print(f"  distinct: {seq.distinct_count}")
    return EXIT_OK


def cmd_classify(args, cfg: RunConfig) -> int:
    space = parse_input(args.input)
    _check_cap(space, cfg)
    _, c = _sequence(space)
    if cfg.output_format == "json":
        print(json.dumps(c.to_json(), sort_keys=True))
    elif cfg.output_format == "csv":
        names = list(c.to_json()["flags"])
        print(",".join(["n_generative", *names, "sequence_distinct"]))
        flags = c.to_json()["flags"]
        print(",".join([str(c.n_generative), *(str(int(flags[k])) for k in names),
                        str(c.sequence.distinct_count)]))
    else:
        print(c.label())
        print("  flags: " + " ".join(c.flags.names()))
    return EXIT_OK


def cmd_census(args, cfg: RunConfig) -> int:
    if args.n > cfg.max_n:
        raise CapExceeded(f"n={args.n} above cap {cfg.max_n}")
    row = census(args.n, jobs=cfg.jobs, cache_dir=cfg.cache_dir,
                 cross_validate=args.cross_validate, cap=min(cfg.census_max_n, cfg.max_n))
    if cfg.output_format == "json":
        print(json.dumps(row.to_json(), sort_keys=True))
    elif cfg.output_format == "csv":
        print(",".join(CSV_COLUMNS))
        print(csv_line(row))
    else:
        data = row.to_json()
        for key in ("n", "labeled", "homeo", "g1", "g2a_only", "partition", "laws_checked",
                    "cross_validated"):
            print(f"{key:>16}: {data[key]}")
        for key, v in data["class_counts"].items():
            print(f"{'class ' + key:>16}: {v}")
    return EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    if args.n > cfg.max_n:
        raise CapExceeded(f"n={args.n} above cap {cfg.max_n}")
    if args.strategy == "naive":
        spaces = list(naive_enumerate_topologies(args.n))
    else:
        gen = enumerate_preorders if args.strategy == "rows" else preorders_by_extension
        spaces = [alexandrov_from_preorder(P) for P in gen(args.n, cap=cfg.max_n)]
    if args.up_to_homeo:
        spaces = sorted({canonicalize(T) for T in spaces}, key=lambda T: T.opens)
    if cfg.output_format == "table":
        print(f"{len(spaces)} topologies on {args.n} points ({args.strategy})")
        return EXIT_OK
    for T in spaces:
        print(json.dumps(T.to_json(), separators=(",", ":")))
    return EXIT_OK


def cmd_laws(args, cfg: RunConfig) -> int:
    if args.n > cfg.max_n:
        raise CapExceeded(f"n={args.n} above cap {cfg.max_n}")
    results = run_laws(args.n)
    if cfg.output_format == "json":
        print(json.dumps([r.to_json() for r in results], sort_keys=True))
    elif cfg.output_format == "csv":
        print("law,passed,finite,symbolic,skipped")
        for r in results:
            print(f"{r.name},{int(r.passed)},{r.finite},{r.symbolic},{r.skipped}")
    else:
        for r in results:
            print(r.line())
    failed = [r for r in results if not r.passed]
    if failed:
        print(failed[0].failures[0], file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_symbolic_list(args, cfg: RunConfig) -> int:
    rows = []
    for S in catalog():
        seq, c = symbolic_dual_sequence(S)
        rows.append({
            "space": str(S),
            "dual": str(symbolic_dual(S)),
            "sequence": [str(s) for s in seq.stages],
            "n_generative": c.n_generative,
            "label": c.label(),
            "specialization": specialization_kind(S),
        })
    if cfg.output_format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif cfg.output_format == "csv":
        print("space,dual,n_generative,specialization")
        for r in rows:
            print(f"{r['space']},{r['dual']},{r['n_generative']},{r['specialization']}")
    else:
        for r in rows:
            print(f"{r['space']:<38} -> {r['dual']:<20} {r['label']}")
    return EXIT_OK


def cmd_dual_image(args, cfg: RunConfig) -> int:
    if args.n > min(cfg.max_n, cfg.census_max_n):
        raise CapExceeded(f"n={args.n} above census cap")
    rep = dual_image_report(args.n)
    if cfg.output_format == "json":
        print(json.dumps(rep.to_json(), sort_keys=True))
    elif cfg.output_format == "csv":
        print("n,n_generative,spaces,duals")
        for k, (tot, hit) in sorted(rep.by_generative.items()):
            print(f"{rep.n},{k},{tot},{hit}")
    else:
        data = rep.to_json()
        for key, v in data.items():
            print(f"{key:>24}: {v}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("--format", choices=("table", "json", "csv"))
    common.add_argument("--max-n", type=int, dest="max_n")
    common.add_argument("--jobs", type=int)
    common.add_argument("--cache-dir", dest="cache_dir")

    parser = argparse.ArgumentParser(prog="degroot", description="De Groot duals of finite and catalogued topologies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dual", parents=[common], help="iterate the dual operator")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("classify", parents=[common], help="n-generative class of a space")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", parents=[common], help="verify and classify all n-point spaces")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--cross-validate", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("enumerate", parents=[common], help="list all n-point topologies")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--strategy", choices=("rows", "extension", "naive"), default="rows")
    p.add_argument("--up-to-homeo", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("laws", parents=[common], help="check every law on n points and the catalog")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("symbolic-list", parents=[common], help="symbolic catalog with duals")
    p.set_defaults(func=cmd_symbolic_list)

    p = sub.add_parser("dual-image", parents=[common], help="which spaces arise as duals")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_dual_image)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, args)
        return args.func(args, cfg)
    except (ParseError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except VerificationFailure as exc:
        print(f"verification failed: {exc.law}", file=sys.stderr)
        print(exc.counterexample)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
