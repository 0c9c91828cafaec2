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
from processes.P06_class_items import TutteDomainError, FamilySyntaxError
from processes.P08_multigraph import Multigraph, block_decompose, delete_edge, find_ears, normalize_edge



# ====================================================================================================

def _require_positive(name: str, values: Sequence[int]) -> None:
    for value in values:
        if not isinstance(value, int) or value < 1:
            raise TutteDomainError(f"{name} lengths must be positive integers, got {tuple(values)}")


@dataclass(frozen=True)
class Cycle:
    length: int

    def __post_init__(self):
        _require_positive("Cycle", [self.length])

    def to_dsl(self) -> str:
        return f"C{self.length}"


@dataclass(frozen=True)
class Multiedge:
    count: int

    def __post_init__(self):
        _require_positive("Multiedge", [self.count])

    def to_dsl(self) -> str:
        return "K2" if self.count == 1 else f"M{self.count}"


@dataclass(frozen=True)
class PathGraph:
    """The path P_k on k vertices."""
    vertices: int

    def __post_init__(self):
        _require_positive("Path", [self.vertices])

    def to_dsl(self) -> str:
        return f"P{self.vertices}"


@dataclass(frozen=True)
class Theta:
    """Two vertices joined by internally disjoint paths of the given lengths."""
    lengths: tuple

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if len(self.lengths) < 2:
            raise TutteDomainError(f"A theta graph needs at least two paths, got {self.lengths}")
        _require_positive("Theta", self.lengths)
        if self.lengths.count(1) > 1:
            raise TutteDomainError(f"theta:{_csv(self.lengths)} is not simple: at most one path may have length 1")

    def to_dsl(self) -> str:
        return f"theta:{_csv(self.lengths)}"


@dataclass(frozen=True)
class Delta:
    """
    Vertices x, y, z with ear e on (x, y), ears a, b on (x, z) and ears c, d on (y, z).
    """
    lengths: tuple

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if len(self.lengths) != 5:
            raise TutteDomainError(f"A delta graph takes 5 ear lengths, got {len(self.lengths)}")
        _require_positive("Delta", self.lengths)
        a, b, c, d, _ = self.lengths
        if (a, b) == (1, 1) or (c, d) == (1, 1):
            raise TutteDomainError(f"delta:{_csv(self.lengths)} is not simple: parallel ears cannot both have length 1")

    def to_dsl(self) -> str:
        return f"delta:{_csv(self.lengths)}"


@dataclass(frozen=True)
class Box:
    """
    Vertices u, v, x, y with single ears a..f on (u,v), (x,y), (u,x), (v,y), (v,x), (u,y).
    """
    lengths: tuple

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if len(self.lengths) != 6:
            raise TutteDomainError(f"A box graph takes 6 ear lengths, got {len(self.lengths)}")
        _require_positive("Box", self.lengths)

    def to_dsl(self) -> str:
        return f"box:{_csv(self.lengths)}"


@dataclass(frozen=True)
class Cylinder:
    """
    Vertices u, v, x, y with ears a, b on (u, x), c, d on (v, y), e on (u, v) and f on (x, y).
    """
    lengths: tuple

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if len(self.lengths) != 6:
            raise TutteDomainError(f"A cylinder graph takes 6 ear lengths, got {len(self.lengths)}")
        _require_positive("Cylinder", self.lengths)
        a, b, c, d, _, _ = self.lengths
        if (a, b) == (1, 1) or (c, d) == (1, 1):
            raise TutteDomainError(f"cyl:{_csv(self.lengths)} is not simple: parallel ears cannot both have length 1")

    def to_dsl(self) -> str:
        return f"cyl:{_csv(self.lengths)}"


@dataclass(frozen=True)
class Join:
    """Block join of the parts at a shared cutvertex."""
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise TutteDomainError("A join needs at least two parts")

    def to_dsl(self) -> str:
        return "*".join(part.to_dsl() for part in self.parts)


FamilySpec = Union[Cycle, Multiedge, PathGraph, Theta, Delta, Box, Cylinder, Join]


def _csv(values: Iterable[int]) -> str:
    return ",".join(str(value) for value in values)

# ====================================================================================================

def _ear_graph(anchors: int, ears: Sequence[tuple[int, int, int]]) -> Multigraph:
    """
    Anchor vertices 0..anchors-1, then one path of the given length per
    (s, t, length) ear, internal vertices numbered in ear order.
    """
    edges = []
    next_vertex = anchors
    for s, t, length in ears:
        previous = s
        for _ in range(length - 1):
            edges.append((previous, next_vertex))
            previous = next_vertex
            next_vertex += 1
        edges.append((previous, t))
    return Multigraph(next_vertex, edges)


def join(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """
    Block join at vertex 0 of each part: g2's vertex 0 is merged into g1's
    vertex 0 and its other vertices follow g1's.

    Args:
        g1 (Multigraph): First part.
        g2 (Multigraph): Second part.

    Returns:
        Multigraph: g1 . g2 with g1.n + g2.n - 1 vertices.
    """
    if g1.vertex_count == 0 or g2.vertex_count == 0:
        raise TutteDomainError("Both parts of a join need at least one vertex")
    offset = g1.vertex_count - 1

    def shift(v: int) -> int:
        return 0 if v == 0 else v + offset

    return Multigraph(g2.vertex_count + offset, list(g1.edges) + [(shift(u), shift(v)) for u, v in g2.edges])


def build(spec: FamilySpec) -> Multigraph:
    """
    Concrete labeled multigraph for a family spec.

    Args:
        spec (FamilySpec): Parsed or constructed family expression.

    Returns:
        Multigraph: The realized graph.
    """
    match spec:
        case Cycle(length=1):
            return Multigraph(1, [(0, 0)])
        case Cycle(length=n):
            return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])
        case Multiedge(count=m):
            return Multigraph(2, [(0, 1)] * m)
        case PathGraph(vertices=k):
            return Multigraph(k, [(i, i + 1) for i in range(k - 1)])
        case Theta(lengths=lengths):
            return _ear_graph(2, [(0, 1, length) for length in lengths])
        case Delta(lengths=(a, b, c, d, e)):
            return _ear_graph(3, [(0, 1, e), (0, 2, a), (0, 2, b), (1, 2, c), (1, 2, d)])
        case Box(lengths=(a, b, c, d, e, f)):
            return _ear_graph(4, [(0, 1, a), (2, 3, b), (0, 2, c), (1, 3, d), (1, 2, e), (0, 3, f)])
        case Cylinder(lengths=(a, b, c, d, e, f)):
            return _ear_graph(4, [(0, 1, e), (2, 3, f), (0, 2, a), (0, 2, b), (1, 3, c), (1, 3, d)])
        case Join(parts=parts):
            graph = build(parts[0])
            for part in parts[1:]:
                graph = join(graph, build(part))
            return graph
    raise TutteDomainError(f"Not a family spec: {spec!r}")

# ====================================================================================================

_ATOM = re.compile(
    r"(?P<kind>theta|delta|box|cyl):(?P<args>\s*\d+(?:\s*,\s*\d+)*)"
    r"|(?P<letter>[CMP])(?P<size>\d+)"
    r"|(?P<bridge>K2)"
)

_ARITY = {"theta": (3, 4), "delta": (5,), "box": (6,), "cyl": (6,)}
_FAMILY = {"theta": Theta, "delta": Delta, "box": Box, "cyl": Cylinder}
_LETTER = {"C": Cycle, "M": Multiedge, "P": PathGraph}


def parse_family(text: str) -> FamilySpec:
    """
    Parses the family DSL.

        atom := "C"int | "M"int | "P"int | "K2" | "theta:"a,b,c[,d]
              | "delta:"a,b,c,d,e | "box:"a,..,f | "cyl:"a,..,f
        expr := atom ("*" atom)*

    Whitespace between tokens is ignored.

    Args:
        text (str): DSL text, e.g. "theta:2,2,3" or "C3*K2*K2".

    Returns:
        FamilySpec: A single atom, or a Join of several.
    """
    parts = []
    position = 0
    length = len(text)

    def skip_space(i: int) -> int:
        while i < length and text[i].isspace():
            i += 1
        return i

    while True:
        position = skip_space(position)
        match = _ATOM.match(text, position)
        if match is None:
            raise FamilySyntaxError("Expected a family atom (C, M, P, K2, theta:, delta:, box:, cyl:)", text, position)
        try:
            parts.append(_atom_spec(match))
        except TutteDomainError as e:
            if isinstance(e, FamilySyntaxError):
                raise
            raise FamilySyntaxError(str(e), text, position) from e
        position = skip_space(match.end())
        if position == length:
            break
        if text[position] != "*":
            raise FamilySyntaxError("Expected '*' between blocks", text, position)
        position += 1

    return parts[0] if len(parts) == 1 else Join(tuple(parts))


def _atom_spec(match: "re.Match") -> FamilySpec:
    if match.group("bridge"):
        return Multiedge(1)
    if match.group("letter"):
        return _LETTER[match.group("letter")](int(match.group("size")))
    kind = match.group("kind")
    values = tuple(int(value) for value in match.group("args").split(","))
    if len(values) not in _ARITY[kind]:
        expected = " or ".join(str(arity) for arity in _ARITY[kind])
        raise TutteDomainError(f"{kind} takes {expected} lengths, got {len(values)}")
    return _FAMILY[kind](values)

# ====================================================================================================

def theta_star_spec(n: int) -> Theta:
    """θ(a,b,c) with a+b+c = n+1 and lengths as equal as possible, ascending."""
    if n < 4:
        raise TutteDomainError(f"theta_star needs n >= 4, got {n}")
    q, r = divmod(n + 1, 3)
    return Theta(tuple(sorted([q] * (3 - r) + [q + 1] * r)))


def theta_star(n: int) -> Multigraph:
    return build(theta_star_spec(n))


def _equal_opposite_pairs(lengths: Sequence[int]) -> int:
    return sum(lengths[i] == lengths[i + 1] for i in (0, 2, 4))


def box_star_spec(n: int) -> Box:
    """
    Box graph on n vertices with near-equal ear lengths summing to n+2.

    Among arrangements of that length multiset, keeps those with the most
    equal opposite pairs (a,b), (c,d), (e,f), then the lexicographically
    largest.
    """
    if n < 4:
        raise TutteDomainError(f"box_star needs n >= 4, got {n}")
    q, r = divmod(n + 2, 6)
    multiset = [q + 1] * r + [q] * (6 - r)
    best = max(set(itertools.permutations(multiset)), key=lambda lengths: (_equal_opposite_pairs(lengths), lengths))
    return Box(best)


def box_star(n: int) -> Multigraph:
    return build(box_star_spec(n))

# ====================================================================================================

def comb_move(g1: Multigraph, g2: Multigraph) -> tuple[Multigraph, Multigraph]:
    """
    Builds G = g1 . g2 (joined at vertex 0) and H = G - uv + uw, where v is
    the cutvertex, u the least neighbour of v inside g1 and w the least
    neighbour of v inside g2.

    Args:
        g1 (Multigraph): Block whose edge uv is moved.
        g2 (Multigraph): Block receiving the edge at w.

    Returns:
        tuple[Multigraph, Multigraph]: (G, H), both in the same (n, m) class.
    """
    if not (g1.is_connected() and g2.is_connected()):
        raise TutteDomainError("Both parts of a comb move must be connected")
    u = _least_neighbour(g1, 0)
    w = _least_neighbour(g2, 0)
    if u is None or w is None:
        raise TutteDomainError("Vertex 0 needs a non-loop neighbour in both parts for a comb move")

    g = join(g1, g2)
    w_joined = w + g1.vertex_count - 1
    moved = delete_edge(g, (u, 0))
    h = Multigraph(moved.vertex_count, list(moved.edges) + [(u, w_joined)])
    return g, h


def _least_neighbour(g: Multigraph, vertex: int) -> Optional[int]:
    neighbours = [v if u == vertex else u for u, v in g.edges if vertex in (u, v) and u != v]
    return min(neighbours, default=None)


def subdivide_edge(g: Multigraph, e: Iterable[int]) -> Multigraph:
    """Replaces one copy of e = uv by a path u - new - v through a new last vertex."""
    u, v = normalize_edge(e)
    stripped = delete_edge(g, (u, v))
    new = g.vertex_count
    return Multigraph(new + 1, list(stripped.edges) + [(u, new), (new, v)])

# ====================================================================================================

def describe(g: Multigraph) -> Optional[str]:
    """
    Renders a connected graph's block structure in the family DSL, e.g.
    "theta:1,2,3*K2", or None when some block is not a recognised family.

    Blocks are ordered by edge count (descending), then text. Delta, box and
    cylinder parameters are the lexicographically largest over labelings.
    """
    if not g.is_connected():
        return None
    if g.edge_count == 0:
        return "P1"
    rendered = []
    for block in block_decompose(g):
        text = _describe_block(block)
        if text is None:
            return None
        rendered.append((-block.edge_count, text))
    return "*".join(text for _, text in sorted(rendered))


def _describe_block(block: Multigraph) -> Optional[str]:
    n, m = block.vertex_count, block.edge_count
    if n == 1:
        return "C1"
    if n == 2:
        return Multiedge(m).to_dsl()
    degrees = block.degrees()
    if n == m and all(d == 2 for d in degrees):
        return f"C{n}"

    branch = [v for v in range(n) if degrees[v] >= 3]
    skeleton = defaultdict(list)
    for ear in find_ears(block):
        if ear.closed:
            return None
        s, t = ear.endpoints
        skeleton[frozenset((s, t))].append(ear.length)

    def ears_on(a: int, b: int) -> list:
        return skeleton.get(frozenset((a, b)), [])

    if len(branch) == 2:
        return f"theta:{_csv(sorted(ears_on(*branch)))}"

    candidates = []
    if len(branch) == 3 and sum(len(lengths) for lengths in skeleton.values()) == 5:
        for x, y, z in itertools.permutations(branch):
            e_side, ab, cd = ears_on(x, y), ears_on(x, z), ears_on(y, z)
            if len(e_side) == 1 and len(ab) == 2 and len(cd) == 2:
                candidates.append(("delta", (*sorted(ab, reverse=True), *sorted(cd, reverse=True), e_side[0])))
    if len(branch) == 4 and sum(len(lengths) for lengths in skeleton.values()) == 6:
        for u, v, x, y in itertools.permutations(branch):
            pairs = [ears_on(u, v), ears_on(x, y), ears_on(u, x), ears_on(v, y), ears_on(v, x), ears_on(u, y)]
            if all(len(lengths) == 1 for lengths in pairs):
                candidates.append(("box", tuple(lengths[0] for lengths in pairs)))
            e_side, f_side, ab, cd = ears_on(u, v), ears_on(x, y), ears_on(u, x), ears_on(v, y)
            if len(e_side) == 1 and len(f_side) == 1 and len(ab) == 2 and len(cd) == 2:
                candidates.append(("cyl", (*sorted(ab, reverse=True), *sorted(cd, reverse=True), e_side[0], f_side[0])))
    if not candidates:
        return None
    kind, lengths = max(candidates)
    return f"{kind}:{_csv(lengths)}"
