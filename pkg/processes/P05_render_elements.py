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
from processes.P06_class_items import PosetNode, TuttePoset, TheoremReport
from processes.P07_bipoly import evaluate
from processes.P08_multigraph import Multigraph
from processes.P10_families import describe



# ====================================================================================================

def graph_label(g: Multigraph) -> str:
    """Family rendering when recognised (e.g. "C4*C3"), else the edge list."""
    return describe(g) or " ".join(f"{u}-{v}" for u, v in g.edges)


def node_label(node: PosetNode) -> str:
    return graph_label(node.representative)

# ====================================================================================================

def poset_frame(p: TuttePoset) -> pd.DataFrame:
    """
    One row per class: index, representative label, class size, spanning
    trees, upper covers and the Tutte polynomial.
    """
    rows = [
        {
            "node": index,
            "graph": node_label(node),
            "size": node.size,
            "trees": int(evaluate(node.tutte, 1, 1)),
            "covered_by": ",".join(str(upper) for upper in p.upper_covers(index)) or "-",
            "tutte": node.tutte.render(),
        }
        for index, node in enumerate(p.nodes)
    ]
    return pd.DataFrame(rows, columns=["node", "graph", "size", "trees", "covered_by", "tutte"])


def render_frame(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)\n"
    return frame.to_string(index=False) + "\n"

# ====================================================================================================

def poset_to_dot(p: TuttePoset) -> str:
    """
    Hasse diagram in Graphviz DOT: one node per class, edges lower -> upper.
    """
    lines = [f'digraph "tutte_poset_{p.spec.n}_{p.spec.m}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for index, node in enumerate(p.nodes):
        label = node_label(node).replace('"', '\\"')
        lines.append(f'  n{index} [label="{label}"];')
    for lower, upper in p.cover_edges:
        lines.append(f"  n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"

# ====================================================================================================

def report_text(report: TheoremReport, verbose: bool = False) -> str:
    """
    One status line per report; with verbose, every instance, else only violations.
    """
    lines = [str(report)]
    shown = report.instances if verbose else report.violations
    for check in shown:
        mark = "✅" if check.passed else "❌"
        lines.append(f"  {mark} {check.description}: expected {check.expected}, got {check.observed}")
    return "\n".join(lines) + "\n"
