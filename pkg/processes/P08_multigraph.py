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
from processes.P04_static_lists import ENGINE_SETTINGS
from processes.P06_class_items import TutteDomainError, CapacityError, EdgeClass, Ear



# ====================================================================================================

CanonKey = bytes

Edge = tuple[int, int]


def normalize_edge(edge: Iterable[int]) -> Edge:
    try:
        u, v = edge
        u, v = int(u), int(v)
    except (TypeError, ValueError) as e:
        raise TutteDomainError(f"An edge is a pair of vertex indices, got {edge!r}") from e
    return (u, v) if u <= v else (v, u)

# ====================================================================================================

class Multigraph:
    """
    Labeled multigraph on vertices 0..n-1; loops and parallel edges allowed.

    The edge multiset is kept as a sorted tuple of (u, v) pairs with u <= v,
    so two values are equal iff they have the same labeled edge multiset.
    Instances are immutable.
    """
    __slots__ = ("_n", "_edges", "_hash")

    def __init__(self, vertex_count: int, edges: Iterable = ()):
        if vertex_count < 0:
            raise TutteDomainError(f"Vertex count must be non-negative, got {vertex_count}")
        normalized = []
        for edge in edges:
            u, v = normalize_edge(edge)
            if u < 0 or v >= vertex_count:
                raise TutteDomainError(f"Edge {edge!r} has an endpoint outside [0, {vertex_count})")
            normalized.append((u, v))
        self._n = int(vertex_count)
        self._edges = tuple(sorted(normalized))
        self._hash = None

    # ================================================================================================

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edges(self) -> tuple:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def multiplicities(self) -> Counter:
        return Counter(self._edges)

    def degrees(self) -> list[int]:
        """Degrees with loops counted twice."""
        degree = [0] * self._n
        for u, v in self._edges:
            degree[u] += 1
            degree[v] += 1
        return degree

    def degree(self, vertex: int) -> int:
        return self.degrees()[vertex]

    def loop_counts(self) -> list[int]:
        loops = [0] * self._n
        for u, v in self._edges:
            if u == v:
                loops[u] += 1
        return loops

    def has_loops(self) -> bool:
        return any(u == v for u, v in self._edges)

    def is_simple(self) -> bool:
        return not self.has_loops() and len(set(self._edges)) == len(self._edges)

    def contains_edge(self, edge: Iterable[int]) -> bool:
        return normalize_edge(edge) in self._edges

    # ================================================================================================

    def component_labels(self) -> list[int]:
        """Union-find root of every vertex."""
        parent = list(range(self._n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self._edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)
        return [find(v) for v in range(self._n)]

    def is_connected(self) -> bool:
        if self._n == 0:
            return False
        return len(set(self.component_labels())) == 1

    def components(self) -> list[list[int]]:
        groups = defaultdict(list)
        for vertex, root in enumerate(self.component_labels()):
            groups[root].append(vertex)
        return [groups[root] for root in sorted(groups)]

    def induced(self, vertices: Sequence[int]) -> "Multigraph":
        """Subgraph on the given vertices, relabeled in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Multigraph(len(vertices), [(index[u], index[v]) for u, v in self._edges if u in index and v in index])

    # ================================================================================================

    def simple_graph(self) -> nx.Graph:
        """Underlying simple graph (loops dropped, parallel edges merged)."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from((u, v) for u, v in self._edges if u != v)
        return graph

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self._n))
        graph.add_edges_from(self._edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Multigraph":
        nodes = sorted(graph.nodes)
        index = {node: i for i, node in enumerate(nodes)}
        return cls(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])

    def adjacency_matrix(self) -> np.ndarray:
        """Multiplicity matrix; a loop adds 2 on the diagonal."""
        matrix = np.zeros((self._n, self._n), dtype=np.int64)
        for u, v in self._edges:
            matrix[u, v] += 1
            matrix[v, u] += 1
        return matrix

    def permute(self, perm: Sequence[int]) -> "Multigraph":
        return permute(self, perm)

    # ================================================================================================

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __getstate__(self):
        return (self._n, self._edges)

    def __setstate__(self, state):
        self._n, self._edges = state
        self._hash = None

    def __repr__(self):
        return f"Multigraph({self._n}, {list(self._edges)})"

# ====================================================================================================

def permute(g: Multigraph, perm: Sequence[int]) -> Multigraph:
    """
    Relabels vertex v as perm[v].
    """
    if sorted(perm) != list(range(g.vertex_count)):
        raise TutteDomainError(f"{list(perm)} is not a permutation of {g.vertex_count} vertices")
    return Multigraph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges])


def delete_edge(g: Multigraph, e: Iterable[int]) -> Multigraph:
    """
    Removes one copy of e; the vertex set is unchanged.

    Args:
        g (Multigraph): Source graph.
        e (edge): Vertex pair naming the edge.

    Returns:
        Multigraph: g - e.
    """
    edge = normalize_edge(e)
    edges = list(g.edges)
    try:
        edges.remove(edge)
    except ValueError as err:
        raise TutteDomainError(f"Edge {edge} is not in the graph") from err
    return Multigraph(g.vertex_count, edges)


def identify_vertices(g: Multigraph, u: int, v: int) -> Multigraph:
    """
    Merges u and v: the larger index is mapped onto the smaller and the
    remaining indices are compacted. Edges between u and v become loops.
    """
    keep, drop = min(u, v), max(u, v)
    if keep == drop:
        return g

    def relabel(w: int) -> int:
        if w == drop:
            return keep
        return w - 1 if w > drop else w

    return Multigraph(g.vertex_count - 1, [(relabel(a), relabel(b)) for a, b in g.edges])


def contract_edge(g: Multigraph, e: Iterable[int]) -> Multigraph:
    """
    Contracts one copy of e; other edges parallel to e become loops.

    Args:
        g (Multigraph): Source graph.
        e (edge): Non-loop vertex pair naming the edge.

    Returns:
        Multigraph: g / e, with one vertex fewer.
    """
    u, v = normalize_edge(e)
    if u == v:
        raise TutteDomainError(f"Cannot contract loop {(u, v)}; loops are deleted")
    return identify_vertices(delete_edge(g, (u, v)), u, v)


def remove_vertices(g: Multigraph, vertices: Iterable[int]) -> Multigraph:
    """
    Deletes the given vertices with every incident edge and compacts indices.
    """
    dropped = set(vertices)
    kept = [w for w in range(g.vertex_count) if w not in dropped]
    return g.induced(kept)

# ====================================================================================================

def classify_edges(g: Multigraph) -> dict[Edge, EdgeClass]:
    """
    Labels every distinct edge as a loop, a bridge or an ordinary edge.
    Parallel copies share a label (and are never bridges).

    Args:
        g (Multigraph): Graph to classify.

    Returns:
        dict[Edge, EdgeClass]: Label per distinct (u, v) pair.
    """
    bridges = {normalize_edge(edge) for edge in nx.bridges(g.simple_graph())}
    labels = {}
    for edge, count in g.multiplicities().items():
        if edge[0] == edge[1]:
            labels[edge] = EdgeClass.LOOP
        elif count == 1 and edge in bridges:
            labels[edge] = EdgeClass.BRIDGE
        else:
            labels[edge] = EdgeClass.ORDINARY
    return labels

# ====================================================================================================

def block_decompose(g: Multigraph) -> list[Multigraph]:
    """
    Splits a connected multigraph into its blocks as standalone graphs.

    Each loop is its own one-vertex block; a bridge is a K2 block; a bundle
    of parallel edges that is a bridge of the underlying simple graph is a
    multiedge block. An edgeless single vertex has no blocks.

    Args:
        g (Multigraph): Connected graph.

    Returns:
        list[Multigraph]: The blocks, vertices relabeled from 0.
    """
    if not g.is_connected():
        raise TutteDomainError("Block decomposition needs a connected graph")

    counts = g.multiplicities()
    blocks = []
    for (u, v), count in sorted(counts.items()):
        if u == v:
            blocks.extend(Multigraph(1, [(0, 0)]) for _ in range(count))

    for component in nx.biconnected_component_edges(g.simple_graph()):
        pairs = sorted({normalize_edge(edge) for edge in component})
        vertices = sorted({w for pair in pairs for w in pair})
        index = {w: i for i, w in enumerate(vertices)}
        edges = [(index[a], index[b]) for a, b in pairs for _ in range(counts[(a, b)])]
        blocks.append(Multigraph(len(vertices), edges))
    return blocks

# ====================================================================================================

def find_ears(g: Multigraph) -> list[Ear]:
    """
    Reports every maximal chain of edges whose internal vertices have degree
    exactly 2 (and carry no loop).

    A chain that leaves a vertex of degree >= 3 and returns to it (a pendant
    cycle) is reported as an ear from that vertex to the chain's last
    internal vertex, so its endpoints are distinct; the closing edge is left
    out. A cycle component with no vertex of degree >= 3 is reported once as
    a closed ear. Loops are never part of an ear.

    Args:
        g (Multigraph): Graph to scan.

    Returns:
        list[Ear]: Ears in discovery order.
    """
    n, edges = g.vertex_count, g.edges
    incidence: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for index, (u, v) in enumerate(edges):
        if u != v:
            incidence[u].append((index, v))
            incidence[v].append((index, u))
    loops = g.loop_counts()
    internal = [len(incidence[v]) == 2 and not loops[v] for v in range(n)]
    used = [u == v for u, v in edges]

    def step(current: int, arrived_by: int) -> tuple[int, int]:
        (first, w1), (second, w2) = incidence[current]
        return (second, w2) if first == arrived_by else (first, w1)

    ears = []
    for start in range(n):
        if internal[start]:
            continue
        for index, neighbour in incidence[start]:
            if used[index]:
                continue
            used[index] = True
            chain, vertices = [index], [start, neighbour]
            current, arrived_by = neighbour, index
            while internal[current] and current != start:
                arrived_by, current = step(current, arrived_by)
                used[arrived_by] = True
                chain.append(arrived_by)
                vertices.append(current)
            if current == start:
                chain, vertices = chain[:-1], vertices[:-1]
                if not chain:
                    continue
            ears.append(Ear(edges=tuple(edges[i] for i in chain), vertices=tuple(vertices)))

    for start in range(n):
        if not internal[start] or all(used[index] for index, _ in incidence[start]):
            continue
        index, current = incidence[start][0]
        used[index] = True
        chain, vertices = [index], [start, current]
        arrived_by = index
        while current != start:
            arrived_by, current = step(current, arrived_by)
            used[arrived_by] = True
            chain.append(arrived_by)
            vertices.append(current)
        ears.append(Ear(edges=tuple(edges[i] for i in chain), vertices=tuple(vertices), closed=True))
    return ears

# ====================================================================================================

def _refine_colors(n: int, mult: list[list[int]], loops: list[int]) -> list[int]:
    """
    Colour refinement: start from (loops, degree) and split classes by the
    multiset of (neighbour colour, multiplicity) until stable. Colours are
    ranks of sorted signatures, so they are isomorphism-invariant.
    """
    signatures = [(loops[v], sum(mult[v]) + 2 * loops[v]) for v in range(n)]
    ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
    colors = [ranks[sig] for sig in signatures]
    while True:
        signatures = [
            (colors[v], tuple(sorted((colors[w], mult[v][w]) for w in range(n) if mult[v][w] and w != v)))
            for v in range(n)
        ]
        ranks = {sig: r for r, sig in enumerate(sorted(set(signatures)))}
        refined = [ranks[sig] for sig in signatures]
        if len(ranks) == len(set(colors)):
            return refined
        colors = refined


def canonical_form(g: Multigraph, bound: Optional[int] = None) -> tuple[CanonKey, Multigraph]:
    """
    Computes the canonical key of g and its canonically relabeled copy.

    Vertices are first coloured by refinement; slot k of the canonical order
    may only hold a vertex of the k-th smallest colour. Among those orders
    the search keeps the lexicographically largest code, where slot k
    contributes (loops at v_k, mult(v_0, v_k), ..., mult(v_{k-1}, v_k)).
    Branches whose code prefix already falls below the best are cut.

    Args:
        g (Multigraph): Graph to canonicalize.
        bound (int, optional): Largest vertex count accepted (default from ENGINE_SETTINGS).

    Returns:
        tuple[CanonKey, Multigraph]: Key (equal iff isomorphic) and relabeled graph.
    """
    bound = ENGINE_SETTINGS["canonical_bound"] if bound is None else bound
    n = g.vertex_count
    if n > bound:
        raise CapacityError(f"Canonical labeling is bounded to {bound} vertices, got {n}")

    mult = [[0] * n for _ in range(n)]
    loops = [0] * n
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            mult[u][v] += 1
            mult[v][u] += 1

    colors = _refine_colors(n, mult, loops)
    slot_colors = sorted(colors)
    cells = defaultdict(list)
    for vertex, color in enumerate(colors):
        cells[color].append(vertex)

    # twins share every other neighbour; swapping them is an automorphism
    twins = [
        [u != v and loops[u] == loops[v] and all(mult[u][w] == mult[v][w] for w in range(n) if w not in (u, v))
         for v in range(n)]
        for u in range(n)
    ]

    best: list = []
    best_perm: list = []
    prefix: list = []
    perm: list = []
    used = [False] * n

    def search(k: int) -> None:
        nonlocal best, best_perm
        if k == n:
            if not best_perm or prefix > best:
                best, best_perm = list(prefix), list(perm)
            return
        candidates = [
            ((loops[v],) + tuple(mult[p][v] for p in perm), v)
            for v in cells[slot_colors[k]] if not used[v]
        ]
        candidates.sort(reverse=True)
        tried: list = []
        for segment, vertex in candidates:
            if any(twins[other][vertex] for other in tried):
                continue
            tried.append(vertex)
            prefix.append(segment)
            if best_perm and prefix < best[:k + 1]:
                prefix.pop()
                break
            used[vertex] = True
            perm.append(vertex)
            search(k + 1)
            perm.pop()
            used[vertex] = False
            prefix.pop()

    search(0)

    key = f"{n}|" + ";".join(",".join(map(str, segment)) for segment in best)
    relabel = [0] * n
    for slot, vertex in enumerate(best_perm):
        relabel[vertex] = slot
    return key.encode("ascii"), permute(g, relabel)


def canonical_key(g: Multigraph, bound: Optional[int] = None) -> CanonKey:
    """
    Byte string identifying the isomorphism class of g (loops and
    multiplicities respected).
    """
    return canonical_form(g, bound)[0]

# ====================================================================================================

def complement(g: Multigraph) -> Multigraph:
    """
    Complement of a simple graph on the same vertex set.
    """
    if not g.is_simple():
        raise TutteDomainError("Complements are only defined here for simple graphs")
    return Multigraph.from_networkx(nx.complement(g.simple_graph()))

# ====================================================================================================

def parse_edge_list(text: str) -> Multigraph:
    """
    Parses the edge-list format: a first line "n m", then m lines "u v"
    (0-based; "u u" is a loop; repeated lines are parallel edges). Lines
    starting with '#' and blank lines are ignored.

    Args:
        text (str): File contents.

    Returns:
        Multigraph: The graph described.
    """
    rows = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2 or not all(re.fullmatch(r"-?\d+", part) for part in parts):
            raise TutteDomainError(f"Line {number}: expected two integers, got {stripped!r}")
        rows.append((number, int(parts[0]), int(parts[1])))

    if not rows:
        raise TutteDomainError("Edge-list input is empty")
    _, n, m = rows[0]
    edges = [(u, v) for _, u, v in rows[1:]]
    if len(edges) != m:
        raise TutteDomainError(f"Header announces {m} edges but {len(edges)} follow")
    for number, u, v in rows[1:]:
        if not (0 <= u < n and 0 <= v < n):
            raise TutteDomainError(f"Line {number}: vertex out of range for n={n}")
    return Multigraph(n, edges)


def format_edge_list(g: Multigraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
