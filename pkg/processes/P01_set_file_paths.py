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

# Set project root (the folder holding processes/ and main/)
project_root_folder = Path(__file__).resolve().parent.parent

# Set export directory (bare output file names from the CLI land here)
exports_folder = project_root_folder / 'exports'

# Set environment variable names
cache_bytes_env_var = 'TUTTE_CACHE_BYTES'  # Caps memo memory of the Tutte engine
threads_env_var = 'TUTTE_THREADS'  # Overrides the default worker count
ear_reduction_env_var = 'TUTTE_EAR_REDUCTION'  # 0 turns ear reduction off, inherited by worker processes


def resolve_output_path(target: str) -> Path:
    """
    Resolves an output target given on the command line.

    A bare file name (no directory part) is placed in the exports folder; any
    other path is used as given.

    Args:
        target (str): File name or path supplied by the user.

    Returns:
        Path: Absolute path the output should be written to.
    """
    path = Path(target)
    if path.parent == Path('.') and not path.is_absolute():
        exports_folder.mkdir(parents=True, exist_ok=True)
        return exports_folder / path.name
    return path
