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





# ====================================================================================================

# Set Tutte engine defaults
ENGINE_SETTINGS = {
    "canonical_bound": 12,        # Largest vertex count canonical_key accepts
    "oracle_max_edges": 20,       # Subgraph expansion enumerates 2^m subsets
    "ear_reduction": True,        # Reduce along ears of length >= 2 before deletion-contraction
    "edge_choice": "max-degree",  # "max-degree" or "first"
}

# Set enumeration caps (n <= max_vertices, m <= n + max_excess)
ENUMERATION_CAPS = {
    "max_vertices": 9,
    "max_excess": 4,
}

# Parallel fan-out only pays off above this many work items
PARALLEL_MIN_ITEMS = 64

# Set the evaluation points of the parameter table: name -> (x, y)
PARAMETER_POINTS = {
    "spanning_trees": (1, 1),
    "spanning_forests": (2, 1),
    "spanning_connected_subgraphs": (1, 2),
    "spanning_subgraphs": (2, 2),
    "acyclic_orientations": (2, 0),
    "totally_cyclic_orientations": (0, 2),
    "acyclic_single_source": (1, 0),
}

# Set the theorem identifiers understood by verify_theorem
THEOREM_NAMES = (
    "gnn-chain",
    "theta-max",
    "box-max",
    "comb-move",
    "bridge-elim",
    "parallel-ear",
    "cycle-evening",
    "box-dominance",
    "box-evening",
)

# Suites that build a full poset (the rest draw move instances)
STRUCTURAL_THEOREMS = ("gnn-chain", "theta-max", "box-max")

# Defaults for verification suites (n for poset suites, the rest for randomized moves)
SUITE_DEFAULTS = {
    "n": 6,
    "count": 100,
    "seed": 20240501,
    "max_ear": 4,
}

# Set CLI exit codes
EXIT_CODES = {
    "ok": 0,
    "domain": 1,
    "capacity": 2,
    "violations": 1,    # a verification suite recorded a failed instance
}
