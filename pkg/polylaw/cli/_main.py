import argparse
import json
import logging
import sys

from polylaw.fincard import Span, pushout, is_connected, is_acyclic, is_suitable_span
from polylaw.symcat import enumerate_s2, enumerate_s3
from polylaw.matchings import delta1_elements, whiskered_elements
from polylaw.polycat import FamilyMatching, polycompose
from polylaw.exceptions import PolylawError, PolyTableError, PolyTableParseError

from ._encoding import (parse_finmap, parse_s2, parse_s3, parse_ids, parse_pairing, format_values,
                        format_pairing)
from ._tablefile import load_polytable
from ._suites import SUITES, FORMATS, EXIT_OK, EXIT_INPUT, SuiteConfig, run_suite, render

logger = logging.getLogger(__name__)

KINDS = ("s2", "s3", "delta1", "whiskered")
""" What the ``enumerate`` subcommand can list. """


def _emit(args, data, lines):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


def _cardinal(value):
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"{value} is not a cardinal")
    return n


def span_cmd(args):
    """ Pushout and suitability of the span given by two legs. """
    s = Span(parse_finmap(args.left), parse_finmap(args.right))
    p = pushout(s)
    data = {
        "span": str(s),
        "pushout": {"r": int(p.r), "tau1": list(p.tau1.values), "tau2": list(p.tau2.values)},
        "connected": is_connected(s),
        "acyclic": is_acyclic(s),
        "suitable": is_suitable_span(s),
    }
    lines = [data["span"],
             f"pushout: r={int(p.r)} tau1={format_values(p.tau1.values)} tau2={format_values(p.tau2.values)}",
             f"connected: {data['connected']}", f"acyclic: {data['acyclic']}", f"suitable: {data['suitable']}"]
    _emit(args, data, lines)
    return EXIT_OK


def enumerate_cmd(args):
    """ List objects or matchings in canonical order, followed by their count. """
    if args.kind == "s2":
        entries = [str(phi) for phi in enumerate_s2(args.n, args.m)]
    elif args.kind == "s3":
        entries = [str(phi) for phi in enumerate_s3(args.n, args.m, args.r)]
    elif args.kind == "delta1":
        phi, psi = _required(args, "phi", parse_s2), _required(args, "psi", parse_s2)
        entries = [str(x) for x in delta1_elements(phi, psi)]
    else:
        phi, psi = _required(args, "phi", parse_s3), _required(args, "psi", parse_s3)
        entries = [f"{format_values(w.f_n)};{format_values(w.f_m if args.side == 'right' else w.f_r)}"
                   for w in whiskered_elements(args.side, phi, psi)]
    _emit(args, {"kind": args.kind, "entries": entries, "count": len(entries)},
          entries + [f"count: {len(entries)}"])
    return EXIT_OK


def _required(args, name, parse):
    value = getattr(args, name)
    if value is None:
        raise PolylawError(f"enumerate {args.kind} needs --{name}.")
    return parse(value)


def compose_cmd(args):
    """ Binary composition or polycomposition of maps of a table file. """
    P = load_polytable(args.table).table
    if args.fs or args.gs:
        if not (args.fs and args.gs and args.pairing is not None):
            raise PolylawError("Polycomposition needs --fs, --gs and --pairing.")
        fm = FamilyMatching(tuple(P[f] for f in parse_ids(args.fs)), tuple(P[g] for g in parse_ids(args.gs)),
                            parse_pairing(args.pairing))
        h = polycompose(P, fm)
        data = {"fs": [f.id for f in fm.fs], "gs": [g.id for g in fm.gs], "pairing": format_pairing(fm.pairing)}
    else:
        if not (args.g and args.f and args.cut):
            raise PolylawError("Binary composition needs --g, --f and --cut.")
        i, j = args.cut
        h = P.compose(args.g, args.f, i, j)
        data = {"g": args.g, "f": args.f, "cut": [i, j]}
    data.update({"result": h.id, "dom": list(h.dom), "cod": list(h.cod)})
    _emit(args, data, [str(h)])
    return EXIT_OK


def verify_cmd(args):
    """ Run a verification suite and print its report. """
    tables = None
    if args.table:
        loaded = load_polytable(args.table)
        tables = {loaded.path: loaded.table}
    cfg = SuiteConfig(args.suite, args.bound, args.seed, args.format, tables, args.progress)
    code, report = run_suite(cfg)
    print(render(report, cfg.format))
    return code


def _cut(text):
    try:
        i, j = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a cut 'i,j'") from None
    return i, j


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text", help="output format")
    common.add_argument("--verbose", "-v", action="count", default=0, help="log progress; twice for detail")

    parser = argparse.ArgumentParser(prog="polylaw", description="Verify symmetric polycategories and the "
                                     "pseudo-distributive law at 1 by exhaustive enumeration.")
    commands = parser.add_subparsers(dest="command", required=True)

    span = commands.add_parser("span", parents=[common], help="pushout and suitability of a span")
    span.add_argument("left", help="left leg k -> n as 'v1,...,vk@n'")
    span.add_argument("right", help="right leg k -> m as 'v1,...,vk@m'")
    span.set_defaults(func=span_cmd)

    listing = commands.add_parser("enumerate", parents=[common], help="list objects or matchings")
    listing.add_argument("kind", choices=KINDS)
    listing.add_argument("--n", type=_cardinal, default=0)
    listing.add_argument("--m", type=_cardinal, default=0)
    listing.add_argument("--r", type=_cardinal, default=0)
    listing.add_argument("--phi", help="source, 'v1,...,vn@m' or a chain 'lower/upper'")
    listing.add_argument("--psi", help="target, in the same encoding as --phi")
    listing.add_argument("--side", choices=("left", "right"), default="right", help="whiskering side")
    listing.set_defaults(func=enumerate_cmd)

    compose = commands.add_parser("compose", parents=[common], help="compose maps of a table file")
    compose.add_argument("table", help="table file (JSON)")
    compose.add_argument("--g", help="upper map of a binary composite")
    compose.add_argument("--f", help="lower map of a binary composite")
    compose.add_argument("--cut", type=_cut, help="output i of f joined to input j of g, as 'i,j'")
    compose.add_argument("--fs", help="lower family of a polycomposite, comma separated ids")
    compose.add_argument("--gs", help="upper family of a polycomposite, comma separated ids")
    compose.add_argument("--pairing", help="matched pairs 'a.p>b.q,...'")
    compose.set_defaults(func=compose_cmd)

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", choices=SUITES + ("all",), default="all")
    verify.add_argument("--bound", type=int, help="size bound; defaults per suite")
    verify.add_argument("--seed", type=int, default=0, help="seed of the sampled checks")
    verify.add_argument("--table", help="check this table file instead of the built-in corpus")
    verify.add_argument("--progress", action="store_true", help="show progress bars")
    verify.set_defaults(func=verify_cmd)
    return parser


def main(argv=None):
    """Entry point of the ``polylaw`` command.

    Returns
    -------
    int
        0 when the command succeeded and every check passed, 1 when a law
        violation was found, 2 on malformed input.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except PolyTableError as e:
        where = ""
        if getattr(e, "line", None) and not isinstance(e, PolyTableParseError):
            where = f" at line {e.line}, column {e.column}"
        print(f"polylaw: invalid table{where}: {e}", file=sys.stderr)
    except (PolylawError, ValueError, OSError) as e:
        print(f"polylaw: {e}", file=sys.stderr)
    return EXIT_INPUT
