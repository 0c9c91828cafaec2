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
from processes.P04_static_lists import THEOREM_NAMES, STRUCTURAL_THEOREMS, SUITE_DEFAULTS
from processes.P06_class_items import TutteDomainError, ClassSpec, Ordering, TheoremReport
from processes.P07_bipoly import BiPoly
from processes.P08_multigraph import Multigraph, canonical_key
from processes.P09_tutte_engine import tutte
from processes.P10_families import (
    Box, Cycle, Cylinder, Delta, Join, Multiedge, Theta,
    box_star, build, comb_move, describe, join, parse_family, subdivide_edge, theta_star,
)
from processes.P12_poset import build_poset, compare



# ====================================================================================================

def _label(g: Multigraph) -> str:
    return describe(g) or f"{g.vertex_count} vertices {list(g.edges)}"


def _check_pair(report: TheoremReport, description: str, g: Multigraph, h: Multigraph, expected: Ordering) -> None:
    """
    Compares G with H and records whether the outcome matches, including
    witness soundness for Less.
    """
    result = compare(g, h)
    passed = result.ordering is expected
    if passed and expected is Ordering.LESS:
        witness = result.witness
        rebuilt = BiPoly.connector() * witness
        passed = rebuilt == tutte(h) - tutte(g) and witness.is_nonnegative() and not witness.is_zero
    report.record(description, expected.value, result.describe(), passed)


def _int_param(params: dict, name: str) -> int:
    try:
        return int(params[name])
    except KeyError as e:
        raise TutteDomainError(f"Missing parameter {name!r}") from e
    except (TypeError, ValueError) as e:
        raise TutteDomainError(f"Parameter {name!r} must be an integer, got {params[name]!r}") from e


def _int_list(name: str, value) -> list[int]:
    parts = [part for part in value.split(",") if part.strip()] if isinstance(value, str) else list(value)
    try:
        return [int(part) for part in parts]
    except (TypeError, ValueError) as e:
        raise TutteDomainError(f"Parameter {name!r} must be a list of integers, got {value!r}") from e

# ====================================================================================================

def check_gnn_chain(n: int, **options) -> TheoremReport:
    """G(n,n) is the chain C_3.(n-3)K_2 < ... < C_(n-1).K_2 < C_n."""
    if n < 3:
        raise TutteDomainError(f"G(n,n) needs n >= 3, got {n}")
    report = TheoremReport("gnn-chain", {"n": n})
    poset = build_poset(ClassSpec(n, n), **options)

    report.record("poset is a chain", "True", str(poset.is_chain), poset.is_chain)
    report.record("class count", str(n - 2), str(len(poset.nodes)), len(poset.nodes) == n - 2)

    top = poset.maximal_indices
    cycle_key = canonical_key(build(Cycle(n)))
    has_cycle_top = poset.unique_maximum and cycle_key in poset.nodes[top[0]].members
    report.record(f"unique maximum is C{n}", "True", str(has_cycle_top), has_cycle_top)

    bottom = poset.minimal_indices
    comb = Cycle(3) if n == 3 else Join((Cycle(3),) + (Multiedge(1),) * (n - 3))
    bottom_tutte = tutte(build(comb))
    has_comb_bottom = len(bottom) == 1 and poset.nodes[bottom[0]].tutte == bottom_tutte
    report.record(f"unique minimum is {comb.to_dsl()}", "True", str(has_comb_bottom), has_comb_bottom)
    return report


def check_theta_max(n: int, **options) -> TheoremReport:
    """G(n,n+1) has a unique maximum, the near-equal theta graph; maximal graphs are 2-connected."""
    report = TheoremReport("theta-max", {"n": n})
    expected = theta_star(n)
    poset = build_poset(ClassSpec(n, n + 1), **options)
    _record_unique_maximum(report, poset, expected)
    for index in poset.maximal_indices:
        representative = poset.nodes[index].representative
        two_connected = nx.is_biconnected(representative.simple_graph())
        report.record(f"maximal node {index} is 2-connected", "True", str(two_connected), two_connected)
    return report


def check_box_max(n: int, **options) -> TheoremReport:
    """G(n,n+2) has a unique maximum, the box graph built by box_star."""
    report = TheoremReport("box-max", {"n": n})
    poset = build_poset(ClassSpec(n, n + 2), **options)
    _record_unique_maximum(report, poset, box_star(n))
    return report


def _record_unique_maximum(report: TheoremReport, poset, expected: Multigraph) -> None:
    report.record("unique maximum", "True", str(poset.unique_maximum), poset.unique_maximum)
    maximal = poset.maximal_indices
    observed = ", ".join(_label(poset.nodes[i].representative) for i in maximal)
    matches = len(maximal) == 1 and canonical_key(expected) in poset.nodes[maximal[0]].members
    report.record("maximum class contains", _label(expected), observed, matches)

# ====================================================================================================

def _random_block(rng: random.Random, allow_bridge: bool = True, max_ear: int = 4) -> Multigraph:
    choice = rng.randrange(4 if allow_bridge else 3)
    if choice == 0:
        return build(Cycle(rng.randint(3, 3 + max_ear)))
    if choice == 1:
        lengths = [rng.randint(2, max_ear), rng.randint(1, max_ear), rng.randint(2, max_ear)]
        return build(Theta(tuple(lengths)))
    if choice == 2:
        return build(Box(tuple(rng.randint(1, 2) for _ in range(6))))
    return build(Multiedge(1))


def check_comb_move(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """
    G = G1.G2 against H = G - uv + uw: Less when G1 is not K2, Equal when it is.
    """
    params = params or {}
    report = TheoremReport("comb-move", dict(params) if params else {"count": count, "seed": seed})
    if "g1" in params or "g2" in params:
        instances = [(build(parse_family(str(params.get("g1", "C3")))), build(parse_family(str(params.get("g2", "C3")))))]
    else:
        rng = random.Random(seed)
        instances = [(_random_block(rng, True, max_ear), _random_block(rng, True, max_ear)) for _ in range(count)]

    for g1, g2 in instances:
        g, h = comb_move(g1, g2)
        bridge = g1.vertex_count == 2 and g1.edge_count == 1
        expected = Ordering.EQUAL if bridge else Ordering.LESS
        _check_pair(report, f"G1={_label(g1)}, G2={_label(g2)}", g, h, expected)
    return report


def check_bridge_elim(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """G.K2 below G with one edge subdivided, for 2-connected G."""
    params = params or {}
    report = TheoremReport("bridge-elim", dict(params) if params else {"count": count, "seed": seed})
    if "graph" in params:
        graph = build(parse_family(str(params["graph"])))
        index = _int_param(params, "edge") if "edge" in params else 0
        if not nx.is_biconnected(graph.simple_graph()) or graph.edge_count < 3:
            raise TutteDomainError(f"{params['graph']} is not 2-connected")
        if not 0 <= index < graph.edge_count:
            raise TutteDomainError(f"Edge index {index} out of range for {graph.edge_count} edges")
        instances = [(graph, graph.edges[index])]
    else:
        rng = random.Random(seed)
        instances = []
        while len(instances) < count:
            graph = _random_block(rng, False, max_ear)
            if graph.edge_count <= 10:
                instances.append((graph, rng.choice(graph.edges)))

    for graph, edge in instances:
        g = join(graph, build(Multiedge(1)))
        h = subdivide_edge(graph, edge)
        _check_pair(report, f"{_label(graph)}*K2 vs subdivide {edge}", g, h, Ordering.LESS)
    return report


_PARALLEL_PAIRS = {Theta: None, Delta: (0, 2), Cylinder: (0, 2)}


def _shift_parallel(spec, first: int):
    """Moves one edge from the ear at `first` to its parallel ear at `first` + 1."""
    valid = _PARALLEL_PAIRS.get(type(spec), ())
    pairs = range(len(spec.lengths) - 1) if valid is None else valid
    if first not in pairs:
        raise TutteDomainError(f"{spec.to_dsl()} has no parallel ear pair starting at length {first}")
    lengths = list(spec.lengths)
    if not lengths[first] - 1 > lengths[first + 1]:
        raise TutteDomainError(f"parallel-ear needs a - 1 > b, got a={lengths[first]}, b={lengths[first + 1]}")
    lengths[first] -= 1
    lengths[first + 1] += 1
    return type(spec)(tuple(lengths))


def _random_parallel_spec(rng: random.Random, kind: int, max_ear: int):
    b = rng.randint(1, max_ear)
    a = rng.randint(b + 2, b + 1 + max_ear)
    if kind == 0:
        rest = [rng.randint(1, max_ear) for _ in range(rng.randint(1, 2))]
        return Theta((a, b, *rest)), 0
    if kind == 1:
        c, d, e = (rng.randint(1, max_ear) for _ in range(3))
        return Delta((a, b, c, d, e)), 0
    lengths = [rng.randint(1, max_ear) for _ in range(6)]
    first = rng.choice((0, 2))
    lengths[first:first + 2] = [a, b]
    return Cylinder(tuple(lengths)), first


def check_parallel_ear(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """
    A graph with parallel ears of lengths a, b sits below the same graph with
    lengths a-1, b+1 when a-1 > b. Random instances rotate through theta,
    delta and cylinder graphs.
    """
    params = params or {}
    report = TheoremReport("parallel-ear", dict(params) if params else {"count": count, "seed": seed})
    if "family" in params:
        spec = parse_family(str(params["family"]))
        first = _int_param(params, "pair") if "pair" in params else 0
        instances = [(spec, _shift_parallel(spec, first))]
    elif "a" in params:
        a, b = _int_param(params, "a"), _int_param(params, "b")
        rest = _int_list("rest", params.get("rest", "2"))
        spec = Theta((a, b, *rest))
        instances = [(spec, _shift_parallel(spec, 0))]
    else:
        rng = random.Random(seed)
        instances = []
        while len(instances) < count:
            try:
                spec, first = _random_parallel_spec(rng, len(instances) % 3, max_ear)
            except TutteDomainError:
                continue
            instances.append((spec, _shift_parallel(spec, first)))

    for g_spec, h_spec in instances:
        _check_pair(report, f"{g_spec.to_dsl()} vs {h_spec.to_dsl()}", build(g_spec), build(h_spec), Ordering.LESS)
    return report


def check_cycle_evening(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """C_a.C_b below C_(a-1).C_(b+1) when a-1 > b."""
    params = params or {}
    report = TheoremReport("cycle-evening", dict(params) if params else {"count": count, "seed": seed})
    if "a" in params:
        a, b = _int_param(params, "a"), _int_param(params, "b")
        if b < 1 or not a - 1 > b:
            raise TutteDomainError(f"cycle-evening needs b >= 1 and a - 1 > b, got a={a}, b={b}")
        instances = [(a, b)]
    else:
        rng = random.Random(seed)
        instances = []
        for _ in range(count):
            b = rng.randint(3, 3 + 2 * max_ear)
            instances.append((rng.randint(b + 2, b + 2 + 2 * max_ear), b))

    for a, b in instances:
        g_spec, h_spec = Join((Cycle(a), Cycle(b))), Join((Cycle(a - 1), Cycle(b + 1)))
        _check_pair(report, f"{g_spec.to_dsl()} vs {h_spec.to_dsl()}", build(g_spec), build(h_spec), Ordering.LESS)
    return report

# ====================================================================================================

def dominating_box(spec) -> Box:
    """
    The box graph shown above a 2-connected theta, delta or cylinder graph.

        θ(a,b,c,d), a minimal      ->  B(1, 1, b-1, c-1, a, d)
        Δ(a,b,c,d,e), d maximal    ->  B(1, e, a, c, b, d-1)
        C(a,b,c,d,e,f), d maximal  ->  B(1, e+f, a, c, b, d-1)
    """
    match spec:
        case Theta(lengths=(a, b, c, d)):
            if a != min(a, b, c, d):
                raise TutteDomainError(f"{spec.to_dsl()}: the first length must be the minimum")
            return Box((1, 1, b - 1, c - 1, a, d))
        case Delta(lengths=(a, b, c, d, e)):
            if d != max(a, b, c, d):
                raise TutteDomainError(f"{spec.to_dsl()}: d must be the maximum of a, b, c, d")
            return Box((1, e, a, c, b, d - 1))
        case Cylinder(lengths=(a, b, c, d, e, f)):
            if d != max(a, b, c, d):
                raise TutteDomainError(f"{spec.to_dsl()}: d must be the maximum of a, b, c, d")
            return Box((1, e + f, a, c, b, d - 1))
    raise TutteDomainError(f"box-dominance takes theta (4 paths), delta or cylinder graphs, got {spec.to_dsl()}")


def _random_dominance_spec(rng: random.Random, max_ear: int):
    while True:
        kind = rng.randrange(3)
        try:
            if kind == 0:
                lengths = sorted(rng.randint(1, max_ear) for _ in range(4))
                tail = lengths[1:]
                rng.shuffle(tail)
                return Theta((lengths[0], *tail))
            if kind == 1:
                a, b, c, e = (rng.randint(1, max_ear) for _ in range(4))
                d = rng.randint(max(a, b, c, 2), max_ear + 1)
                return Delta((a, b, c, d, e))
            a, b, c, e, f = (rng.randint(1, max_ear) for _ in range(5))
            d = rng.randint(max(a, b, c, 2), max_ear + 1)
            return Cylinder((a, b, c, d, e, f))
        except TutteDomainError:
            continue


def check_box_dominance(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """Every generalized theta, delta and cylinder graph lies below a box graph."""
    params = params or {}
    report = TheoremReport("box-dominance", dict(params) if params else {"count": count, "seed": seed})
    if "family" in params:
        specs = [parse_family(str(params["family"]))]
    else:
        rng = random.Random(seed)
        specs = [_random_dominance_spec(rng, max_ear) for _ in range(count)]

    for spec in specs:
        box = dominating_box(spec)
        _check_pair(report, f"{spec.to_dsl()} vs {box.to_dsl()}", build(spec), build(box), Ordering.LESS)
    return report


def evening_move(box: Box, rule: Optional[int] = None) -> tuple[int, Box]:
    """
    Box evening moves:
        rule 1: b + f - 1 > a + e and f - 1 > a  ->  B(a+1, b, c, d, e, f-1)
        rule 2: b - 1 > e and a > f              ->  B(a-1, b-1, c, d, e+1, f+1)
    With rule None the first applicable one is used.
    """
    a, b, c, d, e, f = box.lengths
    first = b + f - 1 > a + e and f - 1 > a
    second = b - 1 > e and a > f
    if rule in (None, 1) and first:
        return 1, Box((a + 1, b, c, d, e, f - 1))
    if rule in (None, 2) and second:
        return 2, Box((a - 1, b - 1, c, d, e + 1, f + 1))
    raise TutteDomainError(f"{box.to_dsl()} meets no box evening hypothesis" + (f" for rule {rule}" if rule else ""))


def check_box_evening(params: Optional[dict] = None, count: int = 100, seed: int = 0, max_ear: int = 4) -> TheoremReport:
    """Box graphs move up the poset as opposite ear sums even out."""
    params = params or {}
    report = TheoremReport("box-evening", dict(params) if params else {"count": count, "seed": seed})
    if "box" in params:
        spec = parse_family(str(params["box"]))
        if not isinstance(spec, Box):
            raise TutteDomainError(f"box-evening takes a box graph, got {spec.to_dsl()}")
        rule = _int_param(params, "rule") if "rule" in params else None
        instances = [(spec, *evening_move(spec, rule))]
    else:
        rng = random.Random(seed)
        instances = []
        while len(instances) < count:
            spec = Box(tuple(rng.randint(1, max_ear) for _ in range(6)))
            wanted = 1 + len(instances) % 2
            try:
                instances.append((spec, *evening_move(spec, wanted)))
            except TutteDomainError:
                continue

    for spec, rule, moved in instances:
        _check_pair(report, f"rule {rule}: {spec.to_dsl()} vs {moved.to_dsl()}", build(spec), build(moved), Ordering.LESS)
    return report

# ====================================================================================================

_MOVE_SUITES = {
    "comb-move": check_comb_move,
    "bridge-elim": check_bridge_elim,
    "parallel-ear": check_parallel_ear,
    "cycle-evening": check_cycle_evening,
    "box-dominance": check_box_dominance,
    "box-evening": check_box_evening,
}

_STRUCTURAL_SUITES = {
    "gnn-chain": check_gnn_chain,
    "theta-max": check_theta_max,
    "box-max": check_box_max,
}


def verify_theorem(name: str, n: Optional[int] = None, params: Optional[dict] = None, count: Optional[int] = None,
                   seed: Optional[int] = None, max_ear: Optional[int] = None, threads: Optional[int] = None,
                   progress: bool = False) -> list[TheoremReport]:
    """
    Runs one verification suite, or every suite with name "all".

    Poset suites (gnn-chain, theta-max, box-max) build the poset for n and
    check its claimed shape. Move suites build (G, H) pairs from `params`
    when given, otherwise from `count` seeded random instances, and expect
    Less (Equal for a comb move whose moved block is K2).

    Args:
        name (str): Suite name from THEOREM_NAMES, or "all".
        n (int, optional): Vertex count for poset suites.
        params (dict, optional): Explicit instance parameters for a move suite.
        count (int, optional): Random instances per move suite.
        seed (int, optional): Random seed for move suites.
        max_ear (int, optional): Largest random ear length.
        threads (int, optional): Worker processes for poset builds.
        progress (bool): Show progress bars on stderr.

    Returns:
        list[TheoremReport]: One report per suite run.
    """
    if name != "all" and name not in THEOREM_NAMES:
        raise TutteDomainError(f"Unknown theorem {name!r}; choose from {', '.join(THEOREM_NAMES)} or all")
    n = SUITE_DEFAULTS["n"] if n is None else n
    count = SUITE_DEFAULTS["count"] if count is None else count
    seed = SUITE_DEFAULTS["seed"] if seed is None else seed
    max_ear = SUITE_DEFAULTS["max_ear"] if max_ear is None else max_ear

    names = THEOREM_NAMES if name == "all" else (name,)
    reports = []
    for suite in names:
        if suite in STRUCTURAL_THEOREMS:
            reports.append(_STRUCTURAL_SUITES[suite](n, threads=threads, progress=progress))
        else:
            suite_params = params if name != "all" else None
            reports.append(_MOVE_SUITES[suite](suite_params, count=count, seed=seed, max_ear=max_ear))
    return reports
