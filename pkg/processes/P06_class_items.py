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
from processes.P04_static_lists import PARAMETER_POINTS




# ====================================================================================================

class TutteDomainError(ValueError):
    """
    Raised when an input violates an operation's precondition (absent edge,
    contracting a loop, disconnected graph, mismatched classes, a theorem
    hypothesis that does not hold, a malformed file).
    """

class FamilySyntaxError(TutteDomainError):
    """
    Raised when a family DSL string cannot be parsed or validated.
    """

    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            pointer = " " * position + "^"
            message = f"{message} at position {position}\n  {text}\n  {pointer}"
        super().__init__(message)

class CapacityError(RuntimeError):
    """
    Raised when a configured bound is exceeded (canonical labeling bound,
    oracle edge bound, enumeration caps).
    """

# ====================================================================================================

class EdgeClass(Enum):
    BRIDGE = "Bridge"
    LOOP = "Loop"
    ORDINARY = "Ordinary"

# ====================================================================================================

@dataclass(frozen=True)
class Ear:
    """
    A chain of edges whose internal vertices have degree exactly 2.

    `vertices` lists the path in order, endpoints included. A closed ear is a
    whole cycle component with no vertex of degree >= 3; its endpoints are the
    same vertex and it is never reduced, only recognised.
    """
    edges: tuple
    vertices: tuple
    closed: bool = False

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def internal_vertices(self) -> tuple:
        return self.vertices[1:-1] if not self.closed else self.vertices[:-1]

# ====================================================================================================

@dataclass(frozen=True)
class ClassSpec:
    """
    The class G(n, m) of connected simple graphs with n vertices and m edges.
    """
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise TutteDomainError(f"A graph class needs at least one vertex, got n={self.n}")
        if self.m < 0:
            raise TutteDomainError(f"Edge count must be non-negative, got m={self.m}")

    @property
    def is_feasible(self) -> bool:
        """True when connected simple graphs with these counts exist."""
        return self.n - 1 <= self.m <= self.n * (self.n - 1) // 2

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m}

    def __str__(self):
        return f"({self.n},{self.m})"

# ====================================================================================================

class Ordering(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"

@dataclass(frozen=True)
class CompareResult:
    """
    Outcome of comparing G with H in the Tutte poset.

    For LESS the witness P satisfies (x+y-xy) P = T(H) - T(G); for GREATER it
    satisfies (x+y-xy) P = T(G) - T(H). Either way P has non-negative
    coefficients and is non-zero. EQUAL carries the zero polynomial.
    INCOMPARABLE carries no witness and a reason: "no-quotient" when the
    difference is not divisible by the connector, "mixed-signs" when it is but
    the quotient has coefficients of both signs.
    """
    ordering: Ordering
    witness: Optional["BiPoly"] = None
    reason: Optional[str] = None

    def describe(self) -> str:
        if self.ordering is Ordering.INCOMPARABLE:
            return f"{self.ordering.value} ({self.reason})"
        return f"{self.ordering.value}, witness P = {self.witness}"

# ====================================================================================================

@dataclass
class PosetNode:
    """
    One T-equivalence class: every member graph has this Tutte polynomial.
    """
    tutte: "BiPoly"
    members: list
    graphs: list
    label: Optional[str] = None

    @property
    def representative(self) -> "Multigraph":
        return self.graphs[0]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {
            "tutte": self.tutte.render(),
            "members": [[list(edge) for edge in graph.edges] for graph in self.graphs],
            "size": self.size,
        }

# ====================================================================================================

@dataclass
class TuttePoset:
    """
    The (n,m) Tutte polynomial poset on T-equivalence classes.

    `relation` holds every strict pair (i, j) with node i below node j;
    `cover_edges` is its transitive reduction.
    """
    spec: ClassSpec
    nodes: list
    cover_edges: list
    relation: set = field(default_factory=set)
    incomparable_reasons: dict = field(default_factory=dict)

    def upper_covers(self, index: int) -> list[int]:
        return [upper for lower, upper in self.cover_edges if lower == index]

    def lower_covers(self, index: int) -> list[int]:
        return [lower for lower, upper in self.cover_edges if upper == index]

    @property
    def maximal_indices(self) -> list[int]:
        has_upper = {lower for lower, _ in self.cover_edges}
        return [i for i in range(len(self.nodes)) if i not in has_upper]

    @property
    def minimal_indices(self) -> list[int]:
        has_lower = {upper for _, upper in self.cover_edges}
        return [i for i in range(len(self.nodes)) if i not in has_lower]

    @property
    def unique_maximum(self) -> bool:
        maximal = self.maximal_indices
        if len(maximal) != 1:
            return False
        top = maximal[0]
        return all((i, top) in self.relation for i in range(len(self.nodes)) if i != top)

    @property
    def is_chain(self) -> bool:
        count = len(self.nodes)
        return len(self.relation) == count * (count - 1) // 2

    def to_dict(self) -> dict:
        return {
            "spec": self.spec.to_dict(),
            "nodes": [node.to_dict() for node in self.nodes],
            "cover_edges": [[lower, upper] for lower, upper in self.cover_edges],
            "maximal": self.maximal_indices,
            "unique_maximum": self.unique_maximum,
        }

@dataclass(frozen=True)
class MaximalElements:
    nodes: tuple
    indices: tuple
    unique_maximum: bool

# ====================================================================================================

@dataclass(frozen=True)
class ParamTable:
    """
    The seven Tutte evaluations audited along poset relations.
    """
    spanning_trees: int
    spanning_forests: int
    spanning_connected_subgraphs: int
    spanning_subgraphs: int
    acyclic_orientations: int
    totally_cyclic_orientations: int
    acyclic_single_source: int

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAMETER_POINTS}

    def to_json_dict(self) -> dict:
        return {name: str(value) for name, value in self.to_dict().items()}

    def to_frame(self) -> pd.DataFrame:
        rows = [
            {"parameter": name, "point": f"T{PARAMETER_POINTS[name]}", "value": value}
            for name, value in self.to_dict().items()
        ]
        return pd.DataFrame(rows, columns=["parameter", "point", "value"])

# ====================================================================================================

@dataclass(frozen=True)
class InstanceCheck:
    description: str
    expected: str
    observed: str
    passed: bool

@dataclass
class TheoremReport:
    """
    Every instance a verification suite checked, with the outcome of each.
    """
    name: str
    params: dict
    instances: list = field(default_factory=list)

    def record(self, description: str, expected: str, observed: str, passed: bool) -> None:
        self.instances.append(InstanceCheck(description, expected, observed, passed))

    @property
    def violations(self) -> list:
        return [check for check in self.instances if not check.passed]

    @property
    def passed(self) -> bool:
        return bool(self.instances) and not self.violations

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [vars(check) for check in self.instances],
            columns=["description", "expected", "observed", "passed"],
        )

    def __str__(self):
        status = "✅ pass" if self.passed else "❌ FAIL"
        return f"{self.name}: {status} ({len(self.instances)} checked, {len(self.violations)} violations)"
