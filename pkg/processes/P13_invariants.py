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
from processes.P04_static_lists import PARAMETER_POINTS
from processes.P06_class_items import TutteDomainError, ParamTable, TuttePoset
from processes.P07_bipoly import BiPoly, evaluate
from processes.P08_multigraph import Multigraph
from processes.P09_tutte_engine import tutte



# ====================================================================================================

p_symbol = sp.Symbol("p")
k_symbol = sp.Symbol("k")

UniPoly = sp.Poly


def _collapse(t: BiPoly, keep_x: bool) -> dict[int, int]:
    """Coefficient sums of t grouped by one variable's degree (the other set to 1)."""
    grouped: dict = defaultdict(int)
    for i, j, c in t.sorted_terms():
        grouped[i if keep_x else j] += c
    return grouped

# ====================================================================================================

def param_table_from_tutte(t: BiPoly) -> ParamTable:
    return ParamTable(**{name: int(evaluate(t, *point)) for name, point in PARAMETER_POINTS.items()})


def param_table(g: Multigraph) -> ParamTable:
    """
    The seven Tutte evaluations of a connected graph.

    Args:
        g (Multigraph): Connected graph.

    Returns:
        ParamTable: Exact counts (spanning trees, forests, ..., acyclic single-source orientations).
    """
    return param_table_from_tutte(tutte(g))

# ====================================================================================================

def reliability_from_tutte(t: BiPoly, n: int, m: int) -> UniPoly:
    nullity = m - n + 1
    by_y = _collapse(t, keep_x=False)
    if any(j > nullity for j in by_y):
        raise TutteDomainError(f"y-degree of T exceeds the nullity {nullity}; wrong (n, m) for this polynomial")
    # p^(m-n+1) T(1, 1/p) has only non-negative powers of p
    cleared = sp.Add(*[c * p_symbol ** (nullity - j) for j, c in by_y.items()])
    return sp.Poly(sp.expand((1 - p_symbol) ** (n - 1) * cleared), p_symbol, domain=sp.QQ)


def reliability(g: Multigraph) -> UniPoly:
    """
    All-terminal reliability R(G; p), p the edge failure probability:
        R(G; p) = (1-p)^(n-1) p^(m-n+1) T(G; 1, 1/p)

    Args:
        g (Multigraph): Connected graph.

    Returns:
        UniPoly: R as a polynomial in p over QQ.
    """
    return reliability_from_tutte(tutte(g), g.vertex_count, g.edge_count)


def reliability_counts_from_tutte(t: BiPoly, n: int, m: int) -> list[int]:
    # T(1, 1 + z) = sum over connected spanning A of z^(|A| - n + 1)
    counts = [0] * (m + 1)
    for j, c in _collapse(t, keep_x=False).items():
        for power in range(j + 1):
            counts[n - 1 + power] += c * math.comb(j, power)
    return counts


def reliability_counts(g: Multigraph) -> list[int]:
    """
    N_i, the number of connected spanning subgraphs with i edges, for
    i = 0..m; R(G; p) = sum N_i (1-p)^i p^(m-i).
    """
    return reliability_counts_from_tutte(tutte(g), g.vertex_count, g.edge_count)


def chromatic_from_tutte(t: BiPoly, n: int) -> UniPoly:
    at_y_zero = sp.Add(*[c * (1 - k_symbol) ** i for i, j, c in t.sorted_terms() if j == 0])
    return sp.Poly(sp.expand((-1) ** (n - 1) * k_symbol * at_y_zero), k_symbol, domain=sp.QQ)


def chromatic(g: Multigraph) -> UniPoly:
    """P(G; k) = (-1)^(n-1) k T(G; 1-k, 0) for connected G."""
    return chromatic_from_tutte(tutte(g), g.vertex_count)


def flow_from_tutte(t: BiPoly, n: int, m: int) -> UniPoly:
    at_x_zero = sp.Add(*[c * (1 - k_symbol) ** j for i, j, c in t.sorted_terms() if i == 0])
    return sp.Poly(sp.expand((-1) ** (m - n + 1) * at_x_zero), k_symbol, domain=sp.QQ)


def flow(g: Multigraph) -> UniPoly:
    """F(G; k) = (-1)^(m-n+1) T(G; 0, 1-k) for connected G."""
    return flow_from_tutte(tutte(g), g.vertex_count, g.edge_count)


def coefficients_ascending(poly: UniPoly) -> list:
    """Coefficients from the constant term up; [] for the zero polynomial."""
    if poly.is_zero:
        return []
    return list(reversed(poly.all_coeffs()))

# ====================================================================================================

def spanning_tree_count(g: Multigraph) -> int:
    """
    Matrix-tree count: determinant of the Laplacian with row and column 0
    removed. Loops are ignored.
    """
    if not g.is_connected():
        return 0
    if g.vertex_count == 1:
        return 1
    adjacency = g.adjacency_matrix()
    np.fill_diagonal(adjacency, 0)
    laplacian = np.diag(adjacency.sum(axis=1)) - adjacency
    reduced = sp.Matrix(laplacian[1:, 1:].tolist())
    return int(reduced.det())

# ====================================================================================================

def _node_profile(job: tuple[BiPoly, int, int]) -> dict:
    t, n, m = job
    return {
        "params": param_table_from_tutte(t).to_dict(),
        "reliability N": reliability_counts_from_tutte(t, n, m),
        "chromatic |c|": [abs(int(c)) for c in coefficients_ascending(chromatic_from_tutte(t, n))],
        "flow |c|": [abs(int(c)) for c in coefficients_ascending(flow_from_tutte(t, n, m))],
    }


def _coefficientwise(lower: list, upper: list) -> bool:
    width = max(len(lower), len(upper))
    lower = lower + [0] * (width - len(lower))
    upper = upper + [0] * (width - len(upper))
    return all(a <= b for a, b in zip(lower, upper))


def monotonicity_audit(p: TuttePoset, threads: Optional[int] = None, progress: bool = False) -> pd.DataFrame:
    """
    Checks every cover edge (G below H) for non-decreasing parameters: the
    seven evaluations, connected-spanning-subgraph counts N_i of the
    reliability polynomial, and absolute chromatic and flow coefficients.

    Args:
        p (TuttePoset): Poset to audit.
        threads (int, optional): Worker processes for per-node profiles.
        progress (bool): Show a progress bar on stderr.

    Returns:
        pd.DataFrame: One row per (cover edge, check) with columns lower,
            upper, check, lower_value, upper_value, passed.
    """
    n, m = p.spec.n, p.spec.m
    profiles = parallel_map(_node_profile, [(node.tutte, n, m) for node in p.nodes],
                            threads=threads, progress=progress, label=f"audit {p.spec}")

    rows = []
    for lower, upper in p.cover_edges:
        low, high = profiles[lower], profiles[upper]
        for name in PARAMETER_POINTS:
            a, b = low["params"][name], high["params"][name]
            rows.append({"lower": lower, "upper": upper, "check": name,
                         "lower_value": str(a), "upper_value": str(b), "passed": a <= b})
        for name in ("reliability N", "chromatic |c|", "flow |c|"):
            a, b = low[name], high[name]
            rows.append({"lower": lower, "upper": upper, "check": name,
                         "lower_value": str(a), "upper_value": str(b), "passed": _coefficientwise(a, b)})
    return pd.DataFrame(rows, columns=["lower", "upper", "check", "lower_value", "upper_value", "passed"])


def audit_violations(audit: pd.DataFrame) -> pd.DataFrame:
    return audit[~audit["passed"].astype(bool)]
