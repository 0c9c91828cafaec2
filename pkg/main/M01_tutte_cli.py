# Import Libraries that are required to adjust sys path
import sys                      # Provides access to system-specific parameters and functions
from pathlib import Path        # Offers an object-oriented interface for filesystem paths

# Adjust sys.path so we can import modules from the parent folder
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))
sys.dont_write_bytecode = True  # Prevents _pycache_ creation

# Import Project Libraries
from processes.P00_set_packages import *

# ====================================================================================================

# Import shared functions and file paths from other folders
from processes.P01_set_file_paths import ear_reduction_env_var
from processes.P03_shared_functions import load_graph_argument, write_json_output, write_text_output
from processes.P04_static_lists import EXIT_CODES, THEOREM_NAMES
from processes.P05_render_elements import graph_label, node_label, poset_frame, poset_to_dot, render_frame, report_text
from processes.P06_class_items import TutteDomainError, CapacityError, ClassSpec
from processes.P09_tutte_engine import configure_engine, tutte, tutte_oracle
from processes.P11_enumerator import enumerate_connected
from processes.P12_poset import build_poset, compare, maximal_elements
from processes.P13_invariants import param_table
from processes.P14_theorem_checks import verify_theorem



# ====================================================================================================

class UsageError(Exception):
    """Bad command line; the usage text has already been printed."""


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")

# ====================================================================================================

def cmd_tutte(args) -> int:
    g = load_graph_argument(args.graph)
    polynomial = tutte_oracle(g) if args.oracle else tutte(g)
    if args.json:
        write_json_output({"graph": [list(edge) for edge in g.edges], "n": g.vertex_count,
                           "tutte": polynomial.to_json(), "text": polynomial.render()}, "-")
    else:
        print(polynomial.render())
    return EXIT_CODES["ok"]


def cmd_compare(args) -> int:
    print(compare(load_graph_argument(args.g), load_graph_argument(args.h)).describe())
    return EXIT_CODES["ok"]


def cmd_params(args) -> int:
    table = param_table(load_graph_argument(args.graph))
    if args.json:
        write_json_output(table.to_json_dict(), "-")
    else:
        sys.stdout.write(render_frame(table.to_frame()))
    return EXIT_CODES["ok"]


def cmd_enumerate(args) -> int:
    graphs = enumerate_connected(ClassSpec(args.n, args.m), max_vertices=args.max_vertices,
                                 max_excess=args.max_excess, threads=args.threads, progress=args.progress)
    if args.list:
        for g in graphs:
            print(graph_label(g))
    else:
        print(len(graphs))
    return EXIT_CODES["ok"]


def _poset(args):
    return build_poset(ClassSpec(args.n, args.m), threads=args.threads, progress=args.progress,
                       max_vertices=args.max_vertices, max_excess=args.max_excess)


def cmd_poset(args) -> int:
    poset = _poset(args)
    if args.json:
        write_json_output(poset.to_dict(), args.json)
    if args.dot:
        write_text_output(poset_to_dot(poset), args.dot)
    if not (args.json or args.dot):
        sys.stdout.write(render_frame(poset_frame(poset)))
        print(f"classes: {len(poset.nodes)}  cover edges: {len(poset.cover_edges)}  chain: {poset.is_chain}")
    return EXIT_CODES["ok"]


def cmd_maximal(args) -> int:
    result = maximal_elements(_poset(args))
    for index, node in zip(result.indices, result.nodes):
        print(f"node {index}: {node_label(node)}  T = {node.tutte.render()}")
    print(f"unique maximum: {'yes' if result.unique_maximum else 'no'}")
    return EXIT_CODES["ok"]


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise TutteDomainError(f"--param expects key=value, got {pair!r}")
        params[key.strip()] = value.strip()
    return params


def cmd_verify(args) -> int:
    reports = verify_theorem(args.name, n=args.n, params=_parse_params(args.param), count=args.count,
                             seed=args.seed, threads=args.threads, progress=args.progress)
    for report in reports:
        sys.stdout.write(report_text(report, verbose=args.verbose))
    return EXIT_CODES["ok"] if all(report.passed for report in reports) else EXIT_CODES["violations"]

# ====================================================================================================

def build_parser() -> CliParser:
    common = CliParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help="worker processes (1 = fully sequential)")
    common.add_argument("--progress", action="store_true", help="show progress bars on stderr")
    common.add_argument("--no-ears", action="store_true", help="disable ear reduction in the Tutte engine")

    class_args = CliParser(add_help=False)
    class_args.add_argument("-n", type=int, required=True, help="vertex count")
    class_args.add_argument("-m", type=int, required=True, help="edge count")
    class_args.add_argument("--max-vertices", type=int, default=None, help="enumeration cap on n")
    class_args.add_argument("--max-excess", type=int, default=None, help="enumeration cap on m - n")

    parser = CliParser(prog="tutte-poset", description="Exact Tutte polynomials and (n,m) Tutte polynomial posets.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("tutte", parents=[common], help="Tutte polynomial of a graph")
    p.add_argument("graph", help='family DSL (e.g. "theta:2,2,2") or @edge-list-file')
    p.add_argument("--oracle", action="store_true", help="use the subset expansion instead of the engine")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")
    p.set_defaults(handler=cmd_tutte)

    p = subparsers.add_parser("compare", parents=[common], help="place G relative to H in the poset")
    p.add_argument("g", help="graph G")
    p.add_argument("h", help="graph H")
    p.set_defaults(handler=cmd_compare)

    p = subparsers.add_parser("params", parents=[common], help="the seven Tutte evaluations")
    p.add_argument("graph", help="graph")
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")
    p.set_defaults(handler=cmd_params)

    p = subparsers.add_parser("enumerate", parents=[common, class_args], help="connected graphs of a class")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="print the number of graphs (default)")
    mode.add_argument("--list", action="store_true", help="print one graph per line")
    p.set_defaults(handler=cmd_enumerate)

    p = subparsers.add_parser("poset", parents=[common, class_args], help="build the (n,m) Tutte poset")
    p.add_argument("--json", metavar="PATH", default=None, help='write JSON ("-" for stdout)')
    p.add_argument("--dot", metavar="PATH", default=None, help='write Graphviz DOT ("-" for stdout)')
    p.set_defaults(handler=cmd_poset)

    p = subparsers.add_parser("maximal", parents=[common, class_args], help="maximal classes of the (n,m) poset")
    p.set_defaults(handler=cmd_maximal)

    p = subparsers.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("name", choices=list(THEOREM_NAMES) + ["all"], help="suite name or all")
    p.add_argument("-n", type=int, default=None, help="vertex count for poset suites")
    p.add_argument("--seed", type=int, default=None, help="random seed for move suites")
    p.add_argument("--count", type=int, default=None, help="random instances per move suite")
    p.add_argument("--param", action="append", metavar="KEY=VALUE", help="explicit instance parameter (repeatable)")
    p.add_argument("--verbose", action="store_true", help="list every instance checked")
    p.set_defaults(handler=cmd_verify)
    return parser

# ====================================================================================================

def run(argv: Optional[list[str]] = None) -> int:
    """
    Parses argv, dispatches to a subcommand and maps failures to exit codes:
    1 for usage and domain errors, 2 for capacity errors.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES["domain"]
    except SystemExit as e:
        # --help
        return int(e.code or 0)

    saved_ears = os.environ.get(ear_reduction_env_var)
    if args.no_ears:
        # Spawned workers build their engine from the environment
        os.environ[ear_reduction_env_var] = "0"
        configure_engine(ear_reduction=False)
    try:
        return args.handler(args)
    except CapacityError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES["capacity"]
    except (TutteDomainError, IOError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CODES["domain"]
    finally:
        if args.no_ears:
            if saved_ears is None:
                os.environ.pop(ear_reduction_env_var, None)
            else:
                os.environ[ear_reduction_env_var] = saved_ears
            configure_engine()


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
