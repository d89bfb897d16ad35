"""Command-line interface.

Exit codes: 0 success (or the checked property holds), 1 the checked
property fails, 2 usage or input error. Results go to stdout; logging and
warnings go to stderr.
"""

import argparse
import asyncio
import json
import logging
import sys
from typing import Iterator, List, Optional, Sequence, Tuple

from .aio import census_file_async
from .census import CensusPlan
from .codec import decode, encode, iter_graph6
from .config import BlockerUniverse, CensusConfig, SearchConfig
from .core.graph import Edge, Graph
from .deck import edge_deck
from .error_policies import ContinueOnErrorsPolicy, FailFastPolicy
from .errors import GraphError
from .families import REMOVAL_FAMILIES, FamilyKind, FamilySpec, build
from .recon import ern, verify_theorem1_sweep, verify_theorem2, verify_theorem7
from .swap import find_swap, verify_family_witnesses
from .version import __version__

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2

# Theorems 3-6: which family each constructive swap covers, and default sizes.
_WITNESS_THEOREMS = {
    3: (FamilyKind.KN_MINUS_MATCHING, [6, 8]),
    4: (FamilyKind.KN_MINUS_HAMILTONIAN, [5, 6, 7]),
    5: (FamilyKind.KNN_MINUS_MATCHING, [3, 4, 5]),
    6: (FamilyKind.KNN_MINUS_HAMILTONIAN, [4, 5]),
}

# Instances `verify --theorem 7` checks by default; Hamiltonian families are probes.
_THEOREM7_DEFAULTS = [
    (FamilyKind.KN_MINUS_MATCHING, 6),
    (FamilyKind.KN_MINUS_HAMILTONIAN, 6),
    (FamilyKind.KNN_MINUS_MATCHING, 3),
    (FamilyKind.KNN_MINUS_MATCHING, 4),
    (FamilyKind.KNN_MINUS_HAMILTONIAN, 5),
]
_PROBE_KINDS = (FamilyKind.KN_MINUS_HAMILTONIAN, FamilyKind.KNN_MINUS_HAMILTONIAN)


def _graphs(source: str) -> Iterator[Tuple[str, Graph]]:
    """A positional graph6 string, or '-' for one graph per stdin line."""
    if source == "-":
        for _, text in iter_graph6(sys.stdin):
            yield text, decode(text)
    else:
        yield source, decode(source)


def _universe(args: argparse.Namespace) -> BlockerUniverse:
    return BlockerUniverse.CONNECTED_ONLY if args.connected_blockers else BlockerUniverse.ALL_SIMPLE


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _edge_arg(text: str) -> Optional[Edge]:
    if text == "all":
        return None
    try:
        u, v = (int(part) for part in text.split(","))
        return Edge.of(u, v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'u,v' or 'all', got {text!r}")


def cmd_deck(args: argparse.Namespace) -> int:
    for text, g in _graphs(args.graph):
        deck = edge_deck(g)
        print(f"# {text}: {len(deck.classes)} card classes, {deck.host_edge_count} cards")
        print("class\tmultiplicity\tedge\tcard")
        for i, cls in enumerate(deck.classes):
            print(f"{i}\t{cls.multiplicity}\t{cls.representative_edge}\t{cls.code.decode('ascii')}")
    return EXIT_OK


def cmd_ern(args: argparse.Namespace) -> int:
    results = []
    for text, g in _graphs(args.graph):
        result = ern(g, args.cap, _universe(args))
        results.append((text, result))
    if args.format == "json":
        print(json.dumps([{"g6": text, **result.to_dict()} for text, result in results], indent=2))
        return EXIT_OK
    print("g6\tern\twitness")
    for text, result in results:
        if result.witness_subdeck is not None:
            detail = result.witness_subdeck.describe()
        elif result.certificate is not None:
            detail = f"blocker {encode(result.certificate.blocker)}"
        else:
            detail = "-"
        print(f"{text}\t{result.render()}\t{detail}")
    return EXIT_OK


def cmd_swap(args: argparse.Namespace) -> int:
    status = EXIT_OK
    for text, g in _graphs(args.graph):
        edges = [args.edge] if args.edge is not None else g.edges()
        found = 0
        rows = []
        for e in edges:
            witness = find_swap(g, e, args.k)
            if witness is not None:
                found += 1
            if args.format == "json":
                rows.append({"edge": str(e), "witness": witness.to_dict() if witness else None})
            elif witness is None:
                rows.append(f"{e}\tnone")
            else:
                rows.append(f"{e}\t{witness.describe() if args.witness else witness.size}")
        swappable = found == len(edges)
        if args.format == "json":
            print(json.dumps({"g6": text, "k": args.k, "swappable": swappable, "edges": rows}, indent=2))
        else:
            print(f"# {text}: {'swappable' if swappable else 'not swappable'} at k={args.k} "
                  f"({found}/{len(edges)} edges with witnesses)")
            for row in rows:
                print(row)
        if not swappable:
            status = EXIT_FAILS
    return status


def cmd_family(args: argparse.Namespace) -> int:
    instance = build(FamilySpec(FamilyKind(args.kind), args.n, args.m))
    print(encode(instance.graph))
    removed = " ".join(str(e) for e in sorted(instance.removed_structure)) or "none"
    print(f"# {instance.spec.describe()} removed: {removed}")
    return EXIT_OK


def _verify_theorem1(args: argparse.Namespace) -> int:
    if args.corpus is None and not args.graph:
        raise GraphError("theorem 1 needs --corpus PATH|- or --graph")
    graphs: List[Graph] = [decode(text) for text in args.graph or []]
    if args.corpus == "-":
        graphs.extend(decode(text) for _, text in iter_graph6(sys.stdin))
    elif args.corpus is not None:
        with open(args.corpus, encoding="ascii") as fh:
            graphs.extend(decode(text) for _, text in iter_graph6(fh))
    report = verify_theorem1_sweep(graphs, max(args.cap, 2), _universe(args), progress=args.progress)
    print(f"# {report.graphs} graphs, {len(report.counterexamples)} counterexamples")
    print("ern\tswap2\tcount")
    for (e, s), count in sorted(report.cells.items()):
        print(f"{e}\t{s}\t{count}")
    for g in report.counterexamples:
        print(f"COUNTEREXAMPLE\t{encode(g)}")
    return EXIT_OK if report.holds else EXIT_FAILS


def _family_instances(args: argparse.Namespace, kind: FamilyKind, sizes: Sequence[int]):
    chosen = FamilyKind(args.family) if args.family else kind
    for n in args.n or sizes:
        yield build(FamilySpec(chosen, n))


def _verify_theorem2(args: argparse.Namespace) -> int:
    graphs = [(text, decode(text)) for text in args.graph or []]
    if args.family:
        graphs += [(i.spec.describe(), i.graph) for i in _family_instances(args, FamilyKind.HYPERCUBE, [])]
    if not graphs:
        graphs = [(i.spec.describe(), i.graph) for i in (
            build(FamilySpec(FamilyKind.HYPERCUBE, 3)), build(FamilySpec(FamilyKind.CYCLE, 6)))]
    status = EXIT_OK
    for label, g in graphs:
        report = verify_theorem2(g, _universe(args))
        premises = (f"regular={report.regular} 2-swappable={report.two_swappable} "
                    f"removal-similar={report.removal_similar}")
        if not report.applicable:
            print(f"{label}\t{premises}\tnot applicable")
            continue
        blocker = encode(report.explicit_blocker.blocker) if report.explicit_blocker else "none"
        verdict = "confirmed" if report.holds else "FAILED"
        print(f"{label}\t{premises}\tern>=3 {verdict}\tblocker {blocker}")
        if report.unblocked is not None:
            print(f"  unblocked sub-deck: {report.unblocked.describe()}")
        if not report.holds:
            status = EXIT_FAILS
    return status


def _verify_witnesses(args: argparse.Namespace) -> int:
    kind, sizes = _WITNESS_THEOREMS[args.theorem]
    status = EXIT_OK
    for instance in _family_instances(args, kind, sizes):
        report = verify_family_witnesses(instance)
        passed = len(report.checks) - len(report.failures)
        print(f"{report.description}\t{passed}/{len(report.checks)} edges pass")
        for check in report.failures:
            print(f"  FAIL {check.edge}: constructive={check.constructive is not None} "
                  f"brute-force={check.brute_force is not None} {check.error or ''}".rstrip())
        if not report.holds:
            status = EXIT_FAILS
    return status


def _verify_theorem7(args: argparse.Namespace) -> int:
    if args.family:
        targets = [(FamilyKind(args.family), n) for n in args.n or [6]]
    elif args.n:
        # every removal family defined at each size
        targets = [(kind, n) for n in args.n for kind in REMOVAL_FAMILIES
                   if not FamilySpec(kind, n).validate()]
        if not targets:
            raise GraphError(f"no removal family is defined for --n {args.n}")
    else:
        targets = _THEOREM7_DEFAULTS
    status = EXIT_OK
    print("family\tr\tconn\trsim\tedge-orbits\tswap2\tblocked<=2\tern\trole")
    for kind, n in targets:
        report = verify_theorem7(build(FamilySpec(kind, n)), _universe(args), max(args.cap, 2))
        probe = kind in _PROBE_KINDS
        r = report.regular_degree if report.regular_degree is not None else "-"
        print(f"{report.description}\t{r}\t{report.connected}\t{report.removal_similar}\t"
              f"{report.edge_orbits}\t{report.two_swappable}\t{report.blocked_through_two}\t"
              f"{report.ern.render()}\t{'probe' if probe else 'check'}")
        if report.unblocked is not None:
            print(f"  unblocked sub-deck: {report.unblocked.describe()}")
        if not probe and not report.holds:
            status = EXIT_FAILS
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem == 1:
        return _verify_theorem1(args)
    if args.theorem == 2:
        return _verify_theorem2(args)
    if args.theorem == 7:
        return _verify_theorem7(args)
    return _verify_witnesses(args)


def cmd_census(args: argparse.Namespace) -> int:
    config = CensusConfig(
        search=SearchConfig(ern_cap=args.cap, swap_cap=args.swap_cap, universe=_universe(args)),
        regular_only=args.regular_only,
        connected_only=args.connected_only,
        jobs=args.jobs,
        progress=args.progress,
    )
    policy = FailFastPolicy() if args.fail_fast else ContinueOnErrorsPolicy(verbose=True)
    if args.input == "-":
        report = CensusPlan(config, policy).execute(sys.stdin)
    else:
        report = asyncio.run(census_file_async(args.input, config, policy))
    if args.format == "json":
        print(report.to_json())
    else:
        for line in report.render_tsv():
            print(line)
    return EXIT_FAILS if report.errors else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swapdeck",
        description="Edge-decks, blockers, edge-reconstruction numbers and swapping numbers of small graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="-v for progress messages, -vv for search details")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deck", help="print the edge-deck card classes")
    p.add_argument("graph", help="graph6 string, or '-' to read stdin")
    p.set_defaults(func=cmd_deck)

    p = sub.add_parser("ern", help="compute the edge-reconstruction number")
    p.add_argument("graph", help="graph6 string, or '-' to read stdin")
    p.add_argument("--cap", type=int, default=SearchConfig.ern_cap, help="largest sub-deck size tried")
    p.add_argument("--connected-blockers", action="store_true", help="only connected graphs may block")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_ern)

    p = sub.add_parser("swap", help="search swap witnesses")
    p.add_argument("graph", help="graph6 string, or '-' to read stdin")
    p.add_argument("--k", type=int, default=2, help="largest swap size")
    p.add_argument("--edge", type=_edge_arg, default=None, help="'u,v' or 'all' (default)")
    p.add_argument("--witness", action="store_true", help="print A, B and the vertex map")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_swap)

    p = sub.add_parser("family", help="emit a family instance as graph6")
    p.add_argument("kind", choices=[k.value for k in FamilyKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None, help="second part size for knm")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="check a theorem at desk scale")
    p.add_argument("--theorem", type=int, choices=range(1, 8), required=True)
    p.add_argument("--n", type=_int_list, default=None, help="comma-separated family sizes")
    p.add_argument("--family", choices=[k.value for k in FamilyKind], default=None)
    p.add_argument("--corpus", default=None, help="graph6 file or '-' (theorem 1)")
    p.add_argument("--graph", action="append", default=None, help="graph6 string (repeatable)")
    p.add_argument("--cap", type=int, default=3, help="ern cap")
    p.add_argument("--connected-blockers", action="store_true")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="classify every graph of a graph6 stream")
    p.add_argument("input", nargs="?", default="-", help="graph6 file, or '-' for stdin (default)")
    p.add_argument("--cap", type=int, default=3, help="ern cap")
    p.add_argument("--swap-cap", type=int, default=2, help="swapping number cap")
    p.add_argument("--regular-only", action="store_true")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--connected-blockers", action="store_true")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--progress", action="store_true", help="progress bar on stderr")
    p.add_argument("--fail-fast", action="store_true", help="stop at the first bad line")
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.set_defaults(func=cmd_census)
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
