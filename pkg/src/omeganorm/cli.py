"""Command-line interface.

Exit codes: 0 success, 1 usage or configuration error, 2 a verification
check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .catalog import DEFAULT_CATALOG, GroupSpec, catalog_dir_specs, group_from_ref
from .embedding import PROPERTY_NAMES, classify
from .harness import SUITES, Config, emit_report, run_suite
from .norms import CLASS_ALIASES, OmegaClass, class_members, omega_norm
from .perm import GroupError
from .subgroups import all_subgroups, is_prime, lattice_cap_scope

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "1", "yes"):
        return True
    if low in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="omeganorm",
                     description="Subgroup embedding properties and normalizer "
                                 "intersections of finite permutation groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="subgroup table with embedding-property flags")
    p.add_argument("--group", required=True, help="builtin:NAME[:params] or a group file")
    p.add_argument("--max-lattice", type=int)
    p.add_argument("--format", choices=("json", "md"), default="md")

    p = sub.add_parser("norms", help="normalizer intersection over a subgroup class")
    p.add_argument("--group", required=True)
    p.add_argument("--omega", required=True, choices=tuple(CLASS_ALIASES))
    p.add_argument("--p", type=int, dest="prime")
    p.add_argument("--include-trivial", type=_bool, default=True)
    p.add_argument("--max-lattice", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a verification suite over a catalog")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--catalog", help="directory of *.group.json files")
    p.add_argument("--builtin-only", action="store_true")
    p.add_argument("--max-order", type=int)
    p.add_argument("--max-lattice", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=("json", "md"), default="json")

    p = sub.add_parser("catalog", help="built-in catalog")
    p.add_argument("action", choices=("list",))
    return parser


def _subgroup_row(i, H, rec) -> dict:
    row = {"index": i, "order": H.order, "generators": [list(g.images) for g in H.generators],
           "cycles": " ".join(str(g) for g in H.generators) or "()"}
    row.update(rec.flags())
    return row


def cmd_analyze(args, out) -> int:
    G = group_from_ref(args.group)
    with lattice_cap_scope(args.max_lattice):
        rows = [_subgroup_row(i, H, classify(G, H, strict=False))
                for i, H in enumerate(all_subgroups(G))]
    if args.format == "json":
        doc = {"group": {"name": G.name, "order": G.order, "degree": G.degree},
               "subgroups": rows}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    cols = list(PROPERTY_NAMES) + ["normal", "subnormal"]
    out.write(f"# {G.name} (order {G.order}, degree {G.degree}): {len(rows)} subgroups\n\n")
    out.write("| # | order | generators | " + " | ".join(cols) + " |\n")
    out.write("|---|---|---|" + "---|" * len(cols) + "\n")
    for r in rows:
        flags = " | ".join("Y" if r[c] else "." for c in cols)
        out.write(f"| {r['index']} | {r['order']} | {r['cycles']} | {flags} |\n")
    return EXIT_OK


def cmd_norms(args, out) -> int:
    G = group_from_ref(args.group)
    if args.prime is not None and not is_prime(args.prime):
        raise UsageError(f"--p must be prime, got {args.prime}")
    cls = OmegaClass.parse(args.omega, args.prime, args.include_trivial)
    with lattice_cap_scope(args.max_lattice):
        N = omega_norm(G, cls)
        size = len(class_members(G, cls))
    gens = [list(g.images) for g in N.generators]
    if args.format == "json":
        doc = {"group": G.name, "class": cls.id, "p": cls.p_restriction,
               "include_trivial": cls.include_trivial, "class_size": size,
               "order": N.order, "generators": gens}
        out.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return EXIT_OK
    label = cls.id if cls.p_restriction is None else f"{cls.id}, p={cls.p_restriction}"
    out.write(f"group: {G.name} (order {G.order})\n")
    out.write(f"class: {label} ({size} subgroups)\n")
    out.write(f"order: {N.order}\n")
    out.write("generators: " + (" ".join(str(g) for g in N.generators) or "()") + "\n")
    for g in gens:
        out.write(f"  {g}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    specs: list[GroupSpec] = list(DEFAULT_CATALOG)
    if args.catalog and not args.builtin_only:
        specs += catalog_dir_specs(args.catalog)
    config = Config(max_lattice=args.max_lattice, max_order=args.max_order)
    report = run_suite(args.suite, specs, config)
    text = emit_report(report, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        s = report.summary
        out.write(f"pass {s['pass']}, fail {s['fail']}, skipped {s['skipped']} -> {args.out}\n")
    else:
        out.write(text)
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_catalog(args, out) -> int:
    out.write(f"{'name':<8} {'order':>6} {'degree':>6}  source\n")
    for spec in DEFAULT_CATALOG:
        G = spec.build()
        out.write(f"{spec.name:<8} {G.order:>6} {G.degree:>6}  {spec.source}\n")
    return EXIT_OK


COMMANDS = {"analyze": cmd_analyze, "norms": cmd_norms, "verify": cmd_verify,
            "catalog": cmd_catalog}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (GroupError, UsageError, ValueError, OSError) as e:
        print(f"omeganorm: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
