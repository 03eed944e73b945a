"""Command line front end.

Exit status: 0 when every hard check passes, 1 on a failed check, 2 on a
malformed invocation, 3 when a size guard trips.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .cartan import CoxeterError, parse_type
from .lattice import GuardExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _write(out: Path, name: str, text: str) -> None:
    out.mkdir(parents=True, exist_ok=True)
    (out / name).write_text(text)


def _word(s: str | None, rank: int) -> tuple[int, ...] | None:
    if s is None:
        return None
    try:
        word = tuple(int(x) - 1 for x in s.replace(" ", "").split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse word {s!r}") from exc
    if any(not 0 <= x < rank for x in word):
        raise UsageError(f"word {s!r} uses a generator outside 1..{rank}")
    return word


def _context(args):
    from .cambrian import parse_coxeter
    from .verify import load

    system, rs, wo = load(args.type)
    c = None
    if getattr(args, "coxeter", None) is not None:
        try:
            c = parse_coxeter(system, args.coxeter)
        except (ValueError, CoxeterError) as exc:
            raise UsageError(str(exc)) from exc
    return system, rs, wo, c


def _guards(args):
    from .verify import Guards

    for flag in ("max_chains", "max_classes"):
        value = getattr(args, flag, None)
        if value is not None and value <= 0:
            raise UsageError(f"--{flag.replace('_', '-')} must be positive")
    return Guards(args.max_chains, args.max_classes)


def _chains(args, wo):
    from .verify import _chains

    return list(_chains(args.type, args.max_chains))


# verbs -------------------------------------------------------------------------------


def cmd_gen(args) -> int:
    system, rs, wo, _ = _context(args)
    out = Path(args.out)
    roots = dict(rs.to_json(), type=system.name, cartan=[list(r) for r in system.cartan])
    _write(out, "roots.json", _dump(roots))
    L = wo.lattice()
    data = dict(L.to_json(), elements=[{"id": e.id, "word": [s + 1 for s in e.word], "inv": e.inv}
                                       for e in wo.elements])
    _write(out, "weak-order.json", _dump(data))
    _write(out, "weak-order.dot", L.to_dot(name="weak_order"))
    print(f"{system.name}: {len(rs)} positive roots, {len(wo)} elements -> {out}")
    return EXIT_OK


def _reference(args, rs, wo, c):
    """The reference and its word: --reference if given, else the c-sorting word of w0."""
    from .cambrian import build_cambrian, parse_coxeter
    from .chain_orders import reference_from_word

    if args.reference:
        word = _word(args.reference, rs.rank)
        try:
            return reference_from_word(rs, wo, word), word
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    cd = build_cambrian(rs, wo, c or parse_coxeter(rs.system, "linear"))
    return cd.reference, cd.sorting_words[wo.top]


def cmd_mg(args) -> int:
    from .chain_orders import mg_poset_fast

    system, rs, wo, c = _context(args)
    _guards(args)
    chains = _chains(args, wo)
    ref, word = _reference(args, rs, wo, c)
    mg = mg_poset_fast(wo, ref, chains)
    if args.max_classes is not None and mg.size > args.max_classes:
        raise GuardExceeded(f"{mg.size} classes exceed the guard {args.max_classes}")
    data = dict(mg.to_json(key_width=len(rs.subsystems)), type=system.name, reference=[s + 1 for s in word])
    _write(Path(args.out), "mg.json", _dump(data))
    print(f"{system.name}: {mg.size} chain classes, poset={mg.is_poset}")
    return EXIT_OK


def cmd_cambrian(args) -> int:
    from .cambrian import build_cambrian, cambrian_chain_map, parse_coxeter

    system, rs, wo, c = _context(args)
    _guards(args)
    c = c or parse_coxeter(system, "linear")
    cd = build_cambrian(rs, wo, c)
    out = Path(args.out)
    tag = "".join(str(s + 1) for s in c.word)
    status = EXIT_OK
    if args.action == "quotient":
        Q, q = cd.quotient
        data = dict(Q.to_json(), type=system.name, coxeter=[s + 1 for s in c.word],
                    sortables=cd.sortables, projection=q)
        _write(out, f"cambrian-{tag}.json", _dump(data))
        _write(out, f"cambrian-{tag}.dot", Q.to_dot(name="cambrian"))
        print(f"{system.name} c={tag}: {Q.n} classes")
    elif args.action == "verify-cstable":
        rep = cd.verify_cstable_theorem()
        _write(out, f"cstable-{tag}.json", _dump(rep))
        print(f"{system.name} c={tag}: checked {rep['checked']} edges, {len(rep['failures'])} failures, "
              f"{len(rep['discrepancies'])} discrepancies")
        status = EXIT_OK if not rep["failures"] else EXIT_FAIL
    else:
        cm = cambrian_chain_map(cd, _chains(args, wo))
        s = cm.summary()
        data = {"checked": s["domain_classes"], "failures": [] if cm.report.ok and cm.consistent else cm.report.witnesses,
                "summary": s, "class_map": cm.class_map}
        _write(out, f"chain-map-{tag}.json", _dump(data))
        print(f"{system.name} c={tag}: {s['domain_classes']} -> {s['codomain_classes']} classes, "
              f"contraction={cm.report.ok}")
        status = EXIT_OK if cm.report.ok and cm.consistent else EXIT_FAIL
    return status


def _bruhat_n(args) -> int:
    if args.n is not None:
        return args.n
    system = parse_type(args.type)
    if system.type_tag != "A":
        raise UsageError("bruhat verbs need type A or --n")
    return system.rank


def cmd_bruhat(args) -> int:
    from .bruhat import build_B_n_1, build_B_n_2, map_f, rhbo_experiment, rhbo_search, reduced_words

    n = _bruhat_n(args)
    out = Path(args.out)
    if args.action == "build":
        try:
            B2 = build_B_n_2(n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        B1 = build_B_n_1(n)
        data = {
            "n": n,
            "B1": {"elements": [list(p) for p in B1.elements], "covers": [list(e) for e in B1.covers]},
            "B2": {
                "triples": [list(t) for t in B2.universe],
                "elements": [{"key": format(c.key, f"0{len(B2.universe)}b")[::-1], "rep": [s + 1 for s in c.rep],
                              "words": c.size} for c in B2.elements],
                "covers": [list(e) for e in B2.covers],
            },
        }
        _write(out, f"bruhat-{n}.json", _dump(data))
        print(f"B({n},1): {B1.size} elements, B({n},2): {B2.size} elements")
        return EXIT_OK
    args.type = f"A{n}"
    from .cambrian import build_cambrian, cambrian_chain_map, parse_coxeter

    system, rs, wo, _ = _context(args)
    if args.action == "map-f":
        if n > 4:
            raise GuardExceeded("map-f is limited to n <= 4")
        cd = build_cambrian(rs, wo, parse_coxeter(system, "linear"))
        cm = cambrian_chain_map(cd, _chains(args, wo))
        rep = map_f(n, rs, wo, cd, cm)
        _write(out, f"map-f-{n}.json", _dump(rep))
        print(f"f: B({n},2) -> S({n + 2},3): {rep['domain_size']} -> {rep['codomain_size']}, ok={rep['ok']}")
        return EXIT_OK if rep["ok"] else EXIT_FAIL
    chains = _chains(args, wo)
    if args.reference == "random":
        words = sorted(reduced_words(n))
        word = random.Random(args.seed).choice(words)
        results = [rhbo_experiment(rs, wo, word, chains)]
    elif args.reference:
        results = [rhbo_experiment(rs, wo, _word(args.reference, n), chains)]
    else:
        results = rhbo_search(rs, wo, chains)
    for r in results:
        r["reference"] = [s + 1 for s in r["reference"]]
    _write(out, f"rhbo-{n}.json", _dump(results))
    multi = sum(r["minima"] > 1 or r["maxima"] > 1 for r in results)
    print(f"{len(results)} references, {multi} with several minima or maxima")
    return EXIT_OK


def cmd_verify_all(args) -> int:
    from .verify import run_suite, summarize

    system, _, _, c = _context(args)
    results = run_suite(args.type, jobs=args.jobs, guards=_guards(args), coxeter=c)
    for r in results:
        print(r.line())
    summary = summarize(system.name, results)
    _write(Path(args.out), f"verify-{system.name}.json", _dump(summary))
    print(f"{summary['passed']} passed, {summary['failed']} failed")
    return EXIT_OK if summary["ok"] else EXIT_FAIL


def cmd_experiment(args) -> int:
    from .verify import run_experiments, summarize

    system, _, _, c = _context(args)
    results = run_experiments(args.type, jobs=args.jobs, guards=_guards(args), coxeter=c)
    if args.name != "all":
        results = [r for r in results if r.name.startswith(args.name)]
    for r in results:
        print(f"{r.name}: {json.dumps(r.detail, sort_keys=True)}")
    _write(Path(args.out), f"experiment-{system.name}-{args.name}.json", _dump(summarize(system.name, results)))
    return EXIT_OK


EXPERIMENTS = ["all", "c-stable-equivalence", "unique-maximum", "fibre-intervals", "stable-sets-separate",
               "rhbo-extrema", "map-f-fibre-intervals"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", default="A3", help="Coxeter type such as A3, B3, D4, G2")
    common.add_argument("--coxeter", help="linear, bipartite or a 1-based list such as 2,1,3")
    common.add_argument("--out", default="out", help="directory for artifacts")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify-all and experiment")
    common.add_argument("--seed", type=int, default=0, help="seed for random reference words")
    common.add_argument("--max-chains", type=int, default=None, help="stop (exit 3) above this many maximal chains")
    common.add_argument("--max-classes", type=int, default=None, help="stop (exit 3) above this many chain classes")

    p = argparse.ArgumentParser(prog="coxchains", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)
    sub.add_parser("gen", parents=[common], help="root system and weak order exports")
    mg = sub.add_parser("mg", parents=[common], help="poset of chain classes")
    mg.add_argument("--reference", help="reduced word of w0 used as the reference, 1-based")
    cam = sub.add_parser("cambrian", parents=[common], help="Cambrian quotient, c-stable edges, chain map")
    cam.add_argument("action", choices=["quotient", "verify-cstable", "chain-map"])
    br = sub.add_parser("bruhat", parents=[common], help="higher Bruhat order B(n,2) and the map f")
    br.add_argument("action", choices=["build", "map-f", "rhbo"])
    br.add_argument("--n", type=int, default=None, help="rank n (2..5); defaults to the rank of --type")
    br.add_argument("--reference", help="reduced word of w0, or 'random' (uses --seed)")
    sub.add_parser("verify-all", parents=[common], help="run every theorem check for one type")
    ex = sub.add_parser("experiment", parents=[common], help="open-problem experiments, reported only")
    ex.add_argument("name", nargs="?", default="all", choices=EXPERIMENTS)
    return p


COMMANDS = {
    "gen": cmd_gen,
    "mg": cmd_mg,
    "cambrian": cmd_cambrian,
    "bruhat": cmd_bruhat,
    "verify-all": cmd_verify_all,
    "experiment": cmd_experiment,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        parse_type(args.type)
        return COMMANDS[args.verb](args)
    except (UsageError, CoxeterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardExceeded as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
