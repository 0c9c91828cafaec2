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
from processes.P02_system_processes import parallel_map
from processes.P06_class_items import (
    TutteDomainError, ClassSpec, Ordering, CompareResult, PosetNode, TuttePoset, MaximalElements,
)
from processes.P07_bipoly import BiPoly, evaluate, quotient_by_connector
from processes.P08_multigraph import Multigraph, canonical_key
from processes.P09_tutte_engine import tutte
from processes.P11_enumerator import enumerate_connected



# ====================================================================================================

def compare_polynomials(t_g: BiPoly, t_h: BiPoly) -> CompareResult:
    """
    Places G relative to H given their Tutte polynomials.

    Args:
        t_g (BiPoly): T(G).
        t_h (BiPoly): T(H).

    Returns:
        CompareResult: Equal, Less / Greater with a non-negative witness, or
            Incomparable with reason "no-quotient" or "mixed-signs".
    """
    if t_g == t_h:
        return CompareResult(Ordering.EQUAL, BiPoly.zero())
    quotient = quotient_by_connector(t_h - t_g)
    if quotient is None:
        return CompareResult(Ordering.INCOMPARABLE, reason="no-quotient")
    match quotient.sign_class():
        case "nonnegative":
            return CompareResult(Ordering.LESS, quotient)
        case "nonpositive":
            return CompareResult(Ordering.GREATER, -quotient)
    return CompareResult(Ordering.INCOMPARABLE, reason="mixed-signs")


def compare(g: Multigraph, h: Multigraph) -> CompareResult:
    """
    Decides G vs H in the Tutte poset of their common (n, m) class.

    Args:
        g (Multigraph): Connected graph G.
        h (Multigraph): Connected graph H with the same vertex and edge counts.

    Returns:
        CompareResult: See compare_polynomials.
    """
    if (g.vertex_count, g.edge_count) != (h.vertex_count, h.edge_count):
        raise TutteDomainError(
            f"Graphs lie in different classes: ({g.vertex_count},{g.edge_count}) vs ({h.vertex_count},{h.edge_count})"
        )
    return compare_polynomials(tutte(g), tutte(h))

# ====================================================================================================

def _compare_pair(pair: tuple[BiPoly, BiPoly]) -> CompareResult:
    return compare_polynomials(*pair)


def spanning_trees_of(t: BiPoly) -> int:
    return int(evaluate(t, 1, 1))


def build_poset(spec: ClassSpec, threads: Optional[int] = None, progress: bool = False,
                max_vertices: Optional[int] = None, max_excess: Optional[int] = None) -> TuttePoset:
    """
    Builds the (n, m) Tutte polynomial poset.

    Graphs of the class are grouped by Tutte polynomial; nodes are ordered by
    spanning-tree count, then by the polynomial's canonical rendering. Only
    pairs with strictly increasing tree counts can be related (the connector
    is 1 at (1, 1)), so only those are divided; the rest are recorded as
    incomparable with reason "equal-trees". Cover edges are the transitive
    reduction of the relation.

    Args:
        spec (ClassSpec): Target class.
        threads (int, optional): Worker processes for the Tutte and comparison passes.
        progress (bool): Show progress bars on stderr.
        max_vertices (int, optional): Enumeration vertex cap.
        max_excess (int, optional): Enumeration cap on m - n.

    Returns:
        TuttePoset: Nodes, cover edges and the full relation.
    """
    graphs = enumerate_connected(spec, max_vertices=max_vertices, max_excess=max_excess,
                                 threads=threads, progress=progress)
    polynomials = parallel_map(tutte, graphs, threads=threads, progress=progress, label=f"tutte {spec}")

    classes: dict = {}
    for graph, polynomial in zip(graphs, polynomials):
        classes.setdefault(polynomial, []).append(graph)

    ordered = sorted(classes, key=lambda t: (spanning_trees_of(t), t.render()))
    nodes = [
        PosetNode(tutte=t, members=[canonical_key(graph) for graph in classes[t]], graphs=classes[t])
        for t in ordered
    ]

    trees = [spanning_trees_of(node.tutte) for node in nodes]
    pairs, reasons = [], {}
    for i, j in itertools.combinations(range(len(nodes)), 2):
        if trees[i] < trees[j]:
            pairs.append((i, j))
        else:
            reasons[(i, j)] = "equal-trees"

    results = parallel_map(_compare_pair, [(nodes[i].tutte, nodes[j].tutte) for i, j in pairs],
                           threads=threads, progress=progress, label=f"compare {spec}")
    relation = set()
    for (i, j), result in zip(pairs, results):
        if result.ordering is Ordering.LESS:
            relation.add((i, j))
        else:
            reasons[(i, j)] = result.reason or result.ordering.value

    order = nx.DiGraph()
    order.add_nodes_from(range(len(nodes)))
    order.add_edges_from(relation)
    cover_edges = sorted(nx.transitive_reduction(order).edges())

    return TuttePoset(spec=spec, nodes=nodes, cover_edges=cover_edges, relation=relation, incomparable_reasons=reasons)


def maximal_elements(p: TuttePoset) -> MaximalElements:
    """Nodes without an upper cover, with the unique-maximum flag."""
    indices = tuple(p.maximal_indices)
    return MaximalElements(nodes=tuple(p.nodes[i] for i in indices), indices=indices, unique_maximum=p.unique_maximum)


def incomparability_summary(p: TuttePoset) -> Counter:
    return Counter(p.incomparable_reasons.values())
