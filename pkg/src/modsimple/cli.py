"""Command-line driver.

    modsimple analyze sym:4 -p 3 [--complex poset|elab|bouc] [--json out.json] [--census out.csv]
    modsimple corpus run bundled [--out report.json]
    modsimple search-steinberg-zero bundled -p 2
    modsimple regular-orbits --n 4 --q 2 --p 5

Exit codes: 0 all claims pass, 1 some claim fails, 2 only unverified or
capability-limited results, 3 malformed input.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import __version__
from .builders import build
from .corpus import (
    ResultCache,
    analyze_entry,
    bundled_corpus_path,
    dumps,
    exit_code,
    load_corpus,
    run,
    search_steinberg_zero,
)
from .errors import BuildError, CapabilityError, DomainError, MalformedInputError
from .pcomplex import chain_census_csv, chain_orbits
from .permgrp.subgroups import DEFAULT_LATTICE_BOUND
from .theorem1.glnq import orbit_counts, sylow_glnq
from .theorem1.report import FAIL, UNVERIFIED

EXIT_INPUT = 3


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _summary_line(rep: dict) -> str:
    if "error" in rep:
        return f"{rep.get('builder')} p={rep['p']}: {rep['error']['kind']} error: {rep['error']['message']}"
    verdicts = ", ".join(f"{k}={v['status']}" for k, v in rep["verdicts"].items())
    return (f"{rep['group']['name']} (order {rep['group']['order']}) p={rep['p']}: m_s={rep['m_s']} "
            f"dims={rep['simple_dims']} -> {rep['outcome']} [{verdicts}]")


def cmd_analyze(args) -> int:
    build(args.spec)  # surface builder errors as input errors
    rep = analyze_entry(args.spec, args.p, seed=args.seed, bound=args.lattice_bound)
    rep = {"schema_version": 1, **rep}
    if args.complex and "error" not in rep:
        kind = {"elab": "elementary_abelian"}.get(args.complex, args.complex)
        rep["complex"] = kind
    if args.census:
        G = build(args.spec)
        _write(args.census, chain_census_csv(chain_orbits(G, args.p, args.complex or "poset", args.lattice_bound),
                                             args.complex or "poset"))
    if args.json:
        _write(args.json, dumps(rep))
    if args.json != "-":
        print(_summary_line(rep))
        if args.complex and "euler" in rep:
            kind = rep["complex"]
            print(f"  reduced Euler characteristic ({kind}): {rep['euler'].get(kind)}")
    if rep["outcome"] == FAIL:
        return 1
    return 2 if rep["outcome"] == UNVERIFIED else 0


def cmd_corpus_run(args) -> int:
    path = bundled_corpus_path() if args.file == "bundled" else Path(args.file)
    entries = load_corpus(path)
    cache = None if args.no_cache else ResultCache(args.cache_dir)
    report = run(entries, seed=args.seed, use_cache=not args.no_cache, cache=cache,
                 workers=args.workers, base_dir=path.parent, bound=args.lattice_bound)
    text = dumps(report)
    if args.out:
        _write(args.out, text)
    if args.out != "-":
        for rep in report["reports"]:
            print(f"{rep['entry']}: " + _summary_line(rep))
        s = report["summary"]
        print(f"pass={s['pass']} fail={s['fail']} unverified={s['unverified']}")
    return exit_code(report)


def cmd_search(args) -> int:
    path = bundled_corpus_path() if args.file == "bundled" else Path(args.file)
    out = search_steinberg_zero(load_corpus(path), args.p, base_dir=path.parent, bound=args.lattice_bound)
    _write(args.out, dumps(out))
    return 0


def cmd_regular_orbits(args) -> int:
    gens = sylow_glnq(args.n, args.q, args.p)
    F = gens[0].field
    order, regular, sizes = orbit_counts(F, [g.entries for g in gens], args.n)
    out = {"n": args.n, "q": args.q, "p": args.p, "sylow_order": order,
           "regular_orbits": regular, "orbits": len(sizes)}
    _write(args.out, dumps(out))
    return 0


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="modsimple", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"modsimple {__version__}")
    ap.add_argument("--seed", type=_seed, default=0, help="seed for the chopping PRNG (default 0)")
    ap.add_argument("--lattice-bound", type=int, default=DEFAULT_LATTICE_BOUND,
                    help=f"largest group order for subgroup-lattice work (default {DEFAULT_LATTICE_BOUND})")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one group at one prime")
    a.add_argument("spec", help="builder spec, e.g. sym:4 or file:group.txt")
    a.add_argument("-p", type=int, required=True)
    a.add_argument("--complex", choices=("poset", "elab", "elementary_abelian", "bouc"))
    a.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    a.add_argument("--census", metavar="CSV", help="write the chain census as CSV")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("corpus", help="corpus operations")
    csub = c.add_subparsers(dest="corpus_command", required=True)
    r = csub.add_parser("run", help="analyze every corpus entry")
    r.add_argument("file", help="corpus file, or 'bundled' for the bundled corpus")
    r.add_argument("--out", metavar="OUT", help="write the JSON report file ('-' for stdout)")
    r.add_argument("--no-cache", action="store_true")
    r.add_argument("--cache-dir", type=Path)
    r.add_argument("--workers", type=int, help="worker processes (default: $MODSIMPLE_WORKERS or 1)")
    r.set_defaults(func=cmd_corpus_run)

    s = sub.add_parser("search-steinberg-zero", help="groups with O_p = 1 and zero Steinberg character")
    s.add_argument("file", help="corpus file, or 'bundled' for the bundled corpus")
    s.add_argument("-p", type=int, required=True)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_search)

    g = sub.add_parser("regular-orbits", help="regular orbits of a Sylow subgroup of GL(n, q)")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--out", default="-")
    g.set_defaults(func=cmd_regular_orbits)
    return ap


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (MalformedInputError, BuildError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapabilityError as exc:
        print(f"capability limit: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
