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
from processes.P04_static_lists import ENUMERATION_CAPS
from processes.P06_class_items import ClassSpec, CapacityError
from processes.P08_multigraph import Multigraph, canonical_form



# ====================================================================================================

def _leaf_children(tree: Multigraph) -> list[tuple[bytes, Multigraph]]:
    n = tree.vertex_count
    return [canonical_form(Multigraph(n + 1, list(tree.edges) + [(v, n)])) for v in range(n)]


def _edge_children(graph: Multigraph) -> list[tuple[bytes, Multigraph]]:
    present = set(graph.edges)
    children = {}
    for u, v in itertools.combinations(range(graph.vertex_count), 2):
        if (u, v) not in present:
            key, canonical = canonical_form(Multigraph(graph.vertex_count, list(graph.edges) + [(u, v)]))
            children.setdefault(key, canonical)
    return list(children.items())


def _grow(level: dict, expand: Callable, threads: Optional[int], progress: bool, label: str) -> dict:
    """One augmentation step: expand every class, keep one graph per CanonKey."""
    parents = [level[key] for key in sorted(level)]
    grown = {}
    for children in parallel_map(expand, parents, threads=threads, progress=progress, label=label):
        for key, canonical in children:
            grown.setdefault(key, canonical)
    return grown

# ====================================================================================================

def check_caps(spec: ClassSpec, max_vertices: Optional[int] = None, max_excess: Optional[int] = None) -> None:
    max_vertices = ENUMERATION_CAPS["max_vertices"] if max_vertices is None else max_vertices
    max_excess = ENUMERATION_CAPS["max_excess"] if max_excess is None else max_excess
    if spec.n > max_vertices:
        raise CapacityError(f"Enumeration is capped at n <= {max_vertices}, got n={spec.n}")
    if spec.m > spec.n + max_excess:
        raise CapacityError(
            f"Enumeration is capped at m <= n + {max_excess}, got {spec}; raise max_excess to go further"
        )


def enumerate_connected(spec: ClassSpec, max_vertices: Optional[int] = None, max_excess: Optional[int] = None,
                        threads: Optional[int] = None, progress: bool = False) -> list[Multigraph]:
    """
    All connected simple graphs in G(n, m), one per isomorphism class.

    Trees are grown by leaf addition, then one edge is added per level; each
    level keeps a single canonically relabeled graph per CanonKey. Every
    connected graph arises this way, since it has a spanning tree.

    Args:
        spec (ClassSpec): Target (n, m).
        max_vertices (int, optional): Vertex cap (default from ENUMERATION_CAPS).
        max_excess (int, optional): Cap on m - n (default from ENUMERATION_CAPS).
        threads (int, optional): Worker processes for each level.
        progress (bool): Show progress bars on stderr.

    Returns:
        list[Multigraph]: Canonical representatives sorted by CanonKey.
    """
    check_caps(spec, max_vertices, max_excess)
    n, m = spec.n, spec.m
    if not spec.is_feasible:
        return []

    level = dict([canonical_form(Multigraph(1))])
    for size in range(2, n + 1):
        level = _grow(level, _leaf_children, threads, progress, f"trees n={size}")
    for edges in range(n, m + 1):
        level = _grow(level, _edge_children, threads, progress, f"{ClassSpec(n, edges)}")

    return [level[key] for key in sorted(level)]


def count_connected(spec: ClassSpec, **caps) -> int:
    return len(enumerate_connected(spec, **caps))

# ====================================================================================================

def enumerate_connected_labeled(spec: ClassSpec, max_vertices: int = 6) -> list[Multigraph]:
    """
    Brute-force reference: every m-subset of the edges of K_n, filtered to
    connected graphs and deduplicated by CanonKey.

    Args:
        spec (ClassSpec): Target (n, m).
        max_vertices (int): Cap for the exhaustive scan.

    Returns:
        list[Multigraph]: Canonical representatives sorted by CanonKey.
    """
    if spec.n > max_vertices:
        raise CapacityError(f"Labeled enumeration is capped at n <= {max_vertices}, got n={spec.n}")
    if not spec.is_feasible:
        return []
    found = {}
    for subset in itertools.combinations(itertools.combinations(range(spec.n), 2), spec.m):
        graph = Multigraph(spec.n, subset)
        if graph.is_connected():
            key, canonical = canonical_form(graph)
            found.setdefault(key, canonical)
    return [found[key] for key in sorted(found)]
