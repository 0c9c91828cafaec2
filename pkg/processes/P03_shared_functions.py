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
from processes.P01_set_file_paths import resolve_output_path
from processes.P08_multigraph import Multigraph, parse_edge_list
from processes.P10_families import build, parse_family



# ====================================================================================================

def read_text_file(path: Path) -> str:
    """
    Reads a UTF-8 text file.

    Args:
        path (Path): File to read.

    Returns:
        str: File contents.
    """
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise IOError(f"Failed to read {path}: {e}") from e

# ====================================================================================================

def load_graph_argument(argument: str) -> Multigraph:
    """
    Resolves a graph given on the command line: "@path" reads an edge-list
    file, anything else is parsed as a family DSL expression.

    Args:
        argument (str): e.g. "theta:2,2,2", "C3*K2" or "@graphs/k4.txt".

    Returns:
        Multigraph: The graph described.
    """
    if argument.startswith("@"):
        return parse_edge_list(read_text_file(Path(argument[1:])))
    return build(parse_family(argument))

# ====================================================================================================

def write_text_output(text: str, target: str) -> Optional[Path]:
    """
    Writes text to stdout when target is "-", otherwise to a UTF-8 file (bare
    names land in the exports folder).

    Args:
        text (str): Content to write.
        target (str): "-" or a file name / path.

    Returns:
        Optional[Path]: The file written, or None for stdout.
    """
    if target == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return None

    path = resolve_output_path(target)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise IOError(f"Failed to write {path}: {e}") from e
    print(f"📁 Saved: {path}", file=sys.stderr)
    return path


def write_json_output(data, target: str) -> Optional[Path]:
    return write_text_output(json.dumps(data, indent=2, ensure_ascii=False) + "\n", target)