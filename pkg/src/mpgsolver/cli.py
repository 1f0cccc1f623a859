"""Command-line surface: solve, enum, ttpg, verify.

Exit codes: 0 success, 1 unreadable or malformed arena file, 2 internal
invariant failure (a bug, not bad input), 3 verification found a broken
identity.  MPG_LOG={quiet,info,debug} tunes logging.  Output is
deterministic: running a command twice on the same input produces
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import energy, lattice as lattice_mod, oracle, ttpg as ttpg_mod
from . import values as values_mod, verify as verify_mod
from .arena import parse_arena, reweight, serialize_arena
from .errors import (ArenaFormatError, InternalError, MpgError,
                     OracleBoundError)

log = logging.getLogger("mpgsolver")


def _frac_text(v):
    v = Fraction(v)
    if v.denominator == 1:
        return str(v.numerator)
    return "%d/%d" % (v.numerator, v.denominator)


def _frac_json(v):
    v = Fraction(v)
    return {"num": v.numerator, "den": v.denominator}


def _sepm_text(arena, f):
    return " ".join("%s=%s" % (arena.names[u],
                               "top" if f.is_top(u) else f.values[u])
                    for u in range(arena.n))


def _load(path):
    with open(path, "rb") as handle:
        return parse_arena(handle.read())


def cmd_solve(args):
    arena = _load(args.file)
    log.info("solving %s", arena)
    vals = values_mod.solve_values(arena)
    partition = values_mod.ergodic_partition(arena, vals)
    log.info("%d value class(es): %s", len(partition),
             ", ".join(_frac_text(c.nu) for c in partition))
    strategy = values_mod.synthesize_optimal(arena, vals)
    if not values_mod.is_optimal(arena, vals, strategy):
        raise InternalError("synthesized strategy failed the payoff check")
    if args.format == "json":
        classes = []
        for cls in partition:
            scaled = reweight(cls.subgame, cls.nu)
            f = energy.least_sepm(scaled)
            classes.append({
                "nu": _frac_json(cls.nu),
                "vertices": [arena.names[u] for u in cls.vertices],
                "least_sepm": f.to_json(cls.subgame),
            })
        print(json.dumps({
            "values": vals.to_json(arena)["values"],
            "classes": classes,
            "strategy": strategy.to_json(arena)["choice"],
        }, indent=2, sort_keys=True))
    else:
        print("values:")
        for u in range(arena.n):
            print("  %s = %s" % (arena.names[u], _frac_text(vals.vals[u])))
        for i, cls in enumerate(partition):
            scaled = reweight(cls.subgame, cls.nu)
            f = energy.least_sepm(scaled)
            print("class %d: nu = %s, vertices %s" % (
                i, _frac_text(cls.nu),
                ",".join(arena.names[u] for u in cls.vertices)))
            print("  least-sepm (scale %d): %s"
                  % (f.scale, _sepm_text(cls.subgame, f)))
        print("strategy:")
        for u, v in enumerate(strategy.choice):
            if v is not None:
                print("  %s -> %s" % (arena.names[u], arena.names[v]))
    return 0


def _enum_class(arena, cls, index, list_cap, fmt, out):
    sub, nu = cls.subgame, cls.nu
    if fmt == "text":
        out.write("class %d: nu = %s\n" % (index, _frac_text(nu)))

        def on_sepm(sepm_id, f):
            out.write("  sepm %d: %s\n" % (sepm_id, _sepm_text(sub, f)))

        def on_subgame(node):
            removed = node.removed_arcs(sub)
            label = "root" if not removed else "removed " + ",".join(
                "%s->%s" % (sub.names[u], sub.names[v]) for u, v in removed)
            out.write("  subgame %d: %s (sepm %d)\n"
                      % (node.id, label, node.sepm_id))
    else:
        on_sepm = on_subgame = None
    x, b = lattice_mod.enumerate_lattice(sub, nu, on_sepm=on_sepm,
                                         on_subgame=on_subgame)
    log.info("class %d: %d measure(s), %d basic subgame(s)",
             index, len(x), len(b))
    blocks = lattice_mod.decompose(sub, nu, x, max_listed=list_cap)
    total = sum(block.count for block in blocks)
    degenerate = len(b) > len(x)
    if fmt == "text":
        for block in blocks:
            out.write("  delta %d: count %d%s\n" % (
                block.sepm_id, block.count,
                " (listing %d)" % len(block.strategies)
                if block.truncated else ""))
            for s in block.strategies:
                pairs = ["%s->%s" % (sub.names[u], sub.names[v])
                         for u, v in enumerate(s.choice) if v is not None]
                out.write("    strategy %s\n" % " ".join(pairs))
        if degenerate:
            out.write("  degenerate: |B*| > |X*|\n")
        out.write("  summary: %d sepms, %d subgames, %d optimal strategies\n"
                  % (len(x), len(b), total))
        return None
    return {
        "nu": _frac_json(nu),
        "vertices": list(sub.names),
        "extremal_sepms": [f.to_json(sub) for f in x],
        "basic_subgames": [{
            "id": node.id,
            "removed_arcs": [[sub.names[u], sub.names[v]]
                             for u, v in node.removed_arcs(sub)],
            "least_sepm_id": node.sepm_id,
            "parent_ids": list(node.parent_ids),
        } for node in b.nodes],
        "decomposition": [{
            "sepm_id": block.sepm_id,
            "count": block.count,
            "strategies": [s.to_json(sub)["choice"]
                           for s in block.strategies],
        } for block in blocks],
        "degenerate": degenerate,
    }


def cmd_enum(args):
    arena = _load(args.file)
    vals = values_mod.solve_values(arena)
    partition = values_mod.ergodic_partition(arena, vals)
    if args.format == "json":
        payload = {"classes": [
            _enum_class(arena, cls, i, args.list_strategies, "json",
                        sys.stdout)
            for i, cls in enumerate(partition)]}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for i, cls in enumerate(partition):
            _enum_class(arena, cls, i, args.list_strategies, "text",
                        sys.stdout)
    return 0


def cmd_ttpg(args):
    if args.fixpoint and args.variant != "min":
        print("error: --fixpoint is only valid with --variant min",
              file=sys.stderr)
        return 2
    arena = _load(args.file)
    if args.reweight:
        vals = values_mod.solve_values(arena)
        if len(set(vals.vals)) != 1:
            print("error: --reweight needs a single-valued arena",
                  file=sys.stderr)
            return 2
        arena = reweight(arena, vals.vals[0])
    if args.fixpoint:
        f, k_reached, _ = ttpg_mod.min_ttpg_fixpoint(arena)
        agrees = f == energy.least_sepm(arena)
        if args.format == "json":
            print(json.dumps({
                "k_reached": k_reached,
                "agrees_with_least_sepm": agrees,
                "energy": f.to_json(arena),
            }, indent=2, sort_keys=True))
        else:
            print("fixpoint at k = %d" % k_reached)
            print("agrees with least-sepm: %s" % ("yes" if agrees else "no"))
            print("energy (scale %d): %s" % (f.scale, _sepm_text(arena, f)))
        return 0
    table = (ttpg_mod.plain_ttpg if args.variant == "plain"
             else ttpg_mod.min_ttpg)(arena, args.k)
    if args.format == "json":
        print(json.dumps(table.to_json(arena), indent=2, sort_keys=True))
    else:
        sys.stdout.write(table.to_tsv(arena))
    return 0


def _verify_one(tag, arena, max_strategies):
    try:
        report = verify_mod.verify_arena(arena, max_strategies=max_strategies)
    except OracleBoundError as exc:
        return tag, arena, exc
    return tag, arena, report


def cmd_verify(args):
    jobs = []
    if args.file:
        jobs.append((args.file, _load(args.file)))
    if args.random:
        n, max_out, w_max, seed, count = args.random
        for i in range(count):
            jobs.append(("random-%d" % (seed + i),
                         oracle.gen_random_arena(n, max_out, w_max, seed + i)))
    if not jobs:
        print("error: give an arena file or --random", file=sys.stderr)
        return 2
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(
                lambda job: _verify_one(job[0], job[1], args.max_strategies),
                jobs))
    else:
        results = [_verify_one(tag, arena, args.max_strategies)
                   for tag, arena in jobs]
    failed = 0
    skipped = 0
    for tag, arena, report in results:
        if isinstance(report, OracleBoundError):
            skipped += 1
            print("SKIP %s: %s" % (tag, report))
            continue
        note = " (degenerate)" if report.degenerate else ""
        if report.ok:
            print("PASS %s: %d classes, %d sepms, %d subgames, %d optimal%s"
                  % (tag, report.classes, report.sepms, report.subgames,
                     report.optimal, note))
            continue
        failed += 1
        repro = "mpg_failure_%s.mpg" % tag.replace("/", "_").replace(".", "_")
        with open(repro, "w", encoding="utf-8") as handle:
            handle.write(serialize_arena(arena))
        print("FAIL %s: reproducer written to %s" % (tag, repro))
        for failure in report.failures:
            print("  %s" % failure)
    tail = ", %d skipped (oracle bound)" % skipped if skipped else ""
    print("verified %d arena(s), %d failure(s)%s"
          % (len(results) - skipped, failed, tail))
    return 3 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mpg",
        description="Mean payoff game solver: values, optimal strategies, "
                    "energy-lattice enumeration, truncated total payoffs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="values and one optimal strategy")
    p_solve.add_argument("file")
    p_solve.add_argument("--format", choices=("text", "json"), default="text")
    p_solve.set_defaults(func=cmd_solve)

    p_enum = sub.add_parser("enum", help="enumerate extremal progress "
                                         "measures and basic subgames")
    p_enum.add_argument("file")
    p_enum.add_argument("--list-strategies", type=int, default=16,
                        metavar="N", help="strategies listed per block "
                                          "(counts stay exact)")
    p_enum.add_argument("--format", choices=("text", "json"), default="text")
    p_enum.set_defaults(func=cmd_enum)

    p_ttpg = sub.add_parser("ttpg", help="truncated total-payoff tables")
    p_ttpg.add_argument("file")
    p_ttpg.add_argument("--k", type=int, default=10)
    p_ttpg.add_argument("--variant", choices=("plain", "min"),
                        default="plain")
    p_ttpg.add_argument("--fixpoint", action="store_true",
                        help="iterate the min variant to its fixpoint")
    p_ttpg.add_argument("--reweight", action="store_true",
                        help="reweight by the game value first "
                             "(single-valued arenas)")
    p_ttpg.add_argument("--format", choices=("text", "json"), default="text")
    p_ttpg.set_defaults(func=cmd_ttpg)

    p_verify = sub.add_parser("verify", help="differential battery against "
                                             "the brute-force oracle")
    p_verify.add_argument("file", nargs="?")
    p_verify.add_argument("--random", nargs=5, type=int,
                          metavar=("N", "MAX_OUT", "W_MAX", "SEED", "COUNT"))
    p_verify.add_argument("--max-strategies", type=int, default=10 ** 6)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    levels = {"quiet": logging.ERROR, "info": logging.INFO,
              "debug": logging.DEBUG}
    logging.basicConfig(
        level=levels.get(os.environ.get("MPG_LOG", "quiet"), logging.ERROR),
        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ArenaFormatError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except InternalError as exc:
        print("internal error: %s" % exc, file=sys.stderr)
        return 2
    except MpgError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
