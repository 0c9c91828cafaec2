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
from processes.P02_system_processes import cache_byte_limit, ear_reduction_setting
from processes.P04_static_lists import ENGINE_SETTINGS
from processes.P06_class_items import TutteDomainError, CapacityError, EdgeClass, Ear
from processes.P07_bipoly import BiPoly
from processes.P08_multigraph import (
    Multigraph, block_decompose, canonical_key, classify_edges, contract_edge,
    delete_edge, find_ears, identify_vertices, remove_vertices,
)



# ====================================================================================================

class TutteCache:
    """
    LRU map from CanonKey to BiPoly with hit/miss counters.

    Sizes are estimated per entry; with a byte limit the least recently used
    entries are evicted once the estimate exceeds it. Storing a key twice is
    harmless.
    """

    def __init__(self, byte_limit: Optional[int] = None):
        self.byte_limit = byte_limit
        self.hits = 0
        self.misses = 0
        self._entries: "OrderedDict[bytes, tuple[BiPoly, int]]" = OrderedDict()
        self._bytes = 0

    @staticmethod
    def _estimate(key: bytes, value: BiPoly) -> int:
        return 96 + len(key) + 72 * len(value.terms)

    def get(self, key: bytes) -> Optional[BiPoly]:
        entry = self._entries.get(key)
        if entry is None:
            self.misses += 1
            return None
        self.hits += 1
        self._entries.move_to_end(key)
        return entry[0]

    def put(self, key: bytes, value: BiPoly) -> None:
        if key in self._entries:
            self._entries.move_to_end(key)
            return
        size = self._estimate(key, value)
        self._entries[key] = (value, size)
        self._bytes += size
        if self.byte_limit is not None:
            while self._bytes > self.byte_limit and self._entries:
                _, (_, evicted) = self._entries.popitem(last=False)
                self._bytes -= evicted

    def clear(self) -> None:
        self._entries.clear()
        self._bytes = 0
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._entries)

    def __contains__(self, key):
        return key in self._entries

    def items(self):
        return [(key, value) for key, (value, _) in self._entries.items()]

    def info(self) -> dict:
        return {"hits": self.hits, "misses": self.misses, "size": len(self._entries), "bytes": self._bytes}

# ====================================================================================================

class TutteEngine:
    """
    Exact Tutte polynomials by deletion-contraction with reductions.

    Order of work on a connected graph:
      1. factor over blocks (loops give y, bridges give x);
      2. closed forms for multiedge blocks and cycles;
      3. memo lookup on the block's CanonKey;
      4. ear reduction on a longest ear of length >= 2 (if enabled);
      5. otherwise delete/contract one ordinary edge.
    """

    def __init__(self, ear_reduction: Optional[bool] = None, edge_choice: Optional[str] = None,
                 cache_bytes: Optional[int] = None, canonical_bound: Optional[int] = None):
        if ear_reduction is None:
            ear_reduction = ear_reduction_setting()
        self.ear_reduction = ENGINE_SETTINGS["ear_reduction"] if ear_reduction is None else ear_reduction
        self.edge_choice = edge_choice or ENGINE_SETTINGS["edge_choice"]
        if self.edge_choice not in ("max-degree", "first"):
            raise TutteDomainError(f"Unknown edge choice {self.edge_choice!r}; use 'max-degree' or 'first'")
        self.canonical_bound = canonical_bound or ENGINE_SETTINGS["canonical_bound"]
        self.cache = TutteCache(cache_byte_limit() if cache_bytes is None else cache_bytes)

    # ================================================================================================

    def tutte(self, g: Multigraph) -> BiPoly:
        """
        Tutte polynomial of a connected multigraph; an edgeless single vertex gives 1.
        """
        if not g.is_connected():
            raise TutteDomainError(
                f"Tutte polynomial needs a connected graph ({g.vertex_count} vertices, "
                f"{len(g.components())} components); use tutte_components for products over components"
            )
        return self._connected(g)

    def tutte_components(self, g: Multigraph) -> BiPoly:
        result = BiPoly.one()
        for vertices in g.components():
            result = result * self._connected(g.induced(vertices))
        return result

    def cache_info(self) -> dict:
        return self.cache.info()

    # ================================================================================================

    def _connected(self, g: Multigraph) -> BiPoly:
        if not g.is_connected():
            raise RuntimeError(f"Disconnected intermediate reached the Tutte recursion: {g!r}")
        result = BiPoly.one()
        for block in block_decompose(g):
            result = result * self._block(block)
        return result

    def _block(self, block: Multigraph) -> BiPoly:
        closed = _closed_form(block)
        if closed is not None:
            return closed

        key = canonical_key(block, self.canonical_bound) if block.vertex_count <= self.canonical_bound else None
        if key is not None:
            cached = self.cache.get(key)
            if cached is not None:
                return cached

        value = self._reduce(block)
        if key is not None:
            self.cache.put(key, value)
        return value

    def _reduce(self, block: Multigraph) -> BiPoly:
        if self.ear_reduction:
            ears = [ear for ear in find_ears(block) if not ear.closed and ear.length >= 2]
            if ears:
                ear = max(ears, key=lambda candidate: candidate.length)
                coefficient, deleted, contracted = ear_reduce(block, ear)
                return coefficient * self._connected(deleted) + self._connected(contracted)

        edge = self._choose_edge(block)
        return self._connected(delete_edge(block, edge)) + self._connected(contract_edge(block, edge))

    def _choose_edge(self, block: Multigraph) -> tuple[int, int]:
        candidates = [edge for edge in block.edges if edge[0] != edge[1]]
        if self.edge_choice == "first":
            return candidates[0]
        degree = block.degrees()
        # lexicographically least among maximum endpoint-degree sums
        return min(candidates, key=lambda edge: (-(degree[edge[0]] + degree[edge[1]]), edge))


def _closed_form(block: Multigraph) -> Optional[BiPoly]:
    n, m = block.vertex_count, block.edge_count
    if n == 1:
        return BiPoly.y() ** m
    if n == 2 and not block.has_loops():
        # multiedge block: x + y + ... + y^(m-1)
        return BiPoly.x() + BiPoly.geometric_y(m) - BiPoly.one()
    if n == m and not block.has_loops() and all(d == 2 for d in block.degrees()):
        # cycle: x + ... + x^(n-1) + y
        return BiPoly.geometric_x(n) - BiPoly.one() + BiPoly.y()
    return None

# ====================================================================================================

def ear_reduce(g: Multigraph, ear: Ear) -> tuple[BiPoly, Multigraph, Multigraph]:
    """
    Removes a k-ear in one step:
        T(g) = (1 + x + ... + x^(k-1)) T(g - E) + T(g / E)

    Args:
        g (Multigraph): Graph holding the ear.
        ear (Ear): Open ear of g (distinct endpoints), no edge a bridge.

    Returns:
        tuple[BiPoly, Multigraph, Multigraph]: (coefficient, deleted, contracted).
            `deleted` drops the ear's edges and internal vertices; `contracted`
            additionally identifies the two endpoints.
    """
    if ear.closed:
        raise TutteDomainError("A closed ear has no distinct endpoints to reduce between")
    u, v = ear.endpoints
    if u == v:
        raise TutteDomainError(f"Ear endpoints must be distinct, got {u} twice")

    labels = classify_edges(g)
    stripped = g
    for edge in ear.edges:
        if labels.get(tuple(sorted(edge))) is EdgeClass.BRIDGE:
            raise TutteDomainError(f"Ear edge {tuple(edge)} is a bridge; ear reduction needs non-bridges")
        stripped = delete_edge(stripped, edge)

    internal = set(ear.internal_vertices)
    deleted = remove_vertices(stripped, internal)
    new_u = u - sum(1 for w in internal if w < u)
    new_v = v - sum(1 for w in internal if w < v)
    contracted = identify_vertices(deleted, new_u, new_v)
    return BiPoly.geometric_x(ear.length), deleted, contracted

# ====================================================================================================

def tutte_oracle(g: Multigraph, max_edges: Optional[int] = None) -> BiPoly:
    """
    Corank-nullity expansion over all 2^m edge subsets:
        T(G) = sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))
    with r(A) = n - (components of (V, A)). Works on disconnected graphs too.

    Args:
        g (Multigraph): Graph to expand.
        max_edges (int, optional): Edge bound (default from ENGINE_SETTINGS).

    Returns:
        BiPoly: The Tutte polynomial.
    """
    max_edges = ENGINE_SETTINGS["oracle_max_edges"] if max_edges is None else max_edges
    n, edges = g.vertex_count, g.edges
    m = len(edges)
    if m > max_edges:
        raise CapacityError(f"Subset expansion is bounded to {max_edges} edges, got {m}")

    def rank(mask: int) -> int:
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        merged = 0
        for index in range(m):
            if mask >> index & 1:
                ru, rv = find(edges[index][0]), find(edges[index][1])
                if ru != rv:
                    parent[ru] = rv
                    merged += 1
        return merged

    full_rank = rank((1 << m) - 1)
    exponents = Counter()
    for mask in range(1 << m):
        r = rank(mask)
        exponents[(full_rank - r, bin(mask).count("1") - r)] += 1

    x_shift, y_shift = BiPoly.x() - 1, BiPoly.y() - 1
    result = BiPoly.zero()
    for (corank, nullity), count in exponents.items():
        result = result + (x_shift ** corank) * (y_shift ** nullity) * count
    return result

# ====================================================================================================

# One engine per process; worker processes build their own on first use
_default_engine: Optional[TutteEngine] = None


def default_engine() -> TutteEngine:
    global _default_engine
    if _default_engine is None:
        _default_engine = TutteEngine()
    return _default_engine


def configure_engine(**settings) -> TutteEngine:
    """
    Replaces the process-wide engine, e.g. configure_engine(ear_reduction=False).
    """
    global _default_engine
    _default_engine = TutteEngine(**settings)
    return _default_engine


def tutte(g: Multigraph) -> BiPoly:
    return default_engine().tutte(g)


def tutte_components(g: Multigraph) -> BiPoly:
    return default_engine().tutte_components(g)
