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
from processes.P01_set_file_paths import cache_bytes_env_var, ear_reduction_env_var, threads_env_var
from processes.P04_static_lists import PARALLEL_MIN_ITEMS



# ====================================================================================================

def default_thread_count() -> int:
    """
    Returns the worker count used when none is given: TUTTE_THREADS if set,
    otherwise the number of available CPUs.

    Returns:
        int: Worker count, at least 1.
    """
    override = os.environ.get(threads_env_var)
    if override:
        try:
            return max(1, int(override))
        except ValueError:
            print(f"⚠️ Ignoring non-integer {threads_env_var}={override!r}", file=sys.stderr)
    return max(1, os.cpu_count() or 1)

# ====================================================================================================

def cache_byte_limit() -> Optional[int]:
    """
    Reads the memo memory cap from TUTTE_CACHE_BYTES.

    Returns:
        Optional[int]: The cap in bytes, or None when unset (unbounded).
    """
    raw = os.environ.get(cache_bytes_env_var)
    if not raw:
        return None
    try:
        return max(0, int(raw))
    except ValueError:
        print(f"⚠️ Ignoring non-integer {cache_bytes_env_var}={raw!r}", file=sys.stderr)
        return None

# ====================================================================================================

def ear_reduction_setting() -> Optional[bool]:
    """
    Reads the ear reduction switch from TUTTE_EAR_REDUCTION.

    Returns:
        Optional[bool]: False for 0/false/no/off, True for 1/true/yes/on,
        None when unset or unrecognised (engine default).
    """
    raw = os.environ.get(ear_reduction_env_var)
    if not raw:
        return None
    value = raw.strip().lower()
    if value in ("0", "false", "no", "off"):
        return False
    if value in ("1", "true", "yes", "on"):
        return True
    print(f"⚠️ Ignoring unrecognised {ear_reduction_env_var}={raw!r}", file=sys.stderr)
    return None

# ====================================================================================================

def parallel_map(func: Callable, items: Sequence, threads: Optional[int] = None, progress: bool = False, label: str = "") -> list:
    """
    Applies a picklable top-level function to every item, in order.

    With threads == 1, or too few items to amortise process start-up, the map
    runs in this process. Otherwise items are fanned out to a process pool;
    results come back in input order, so the output is identical to the
    sequential run.

    Args:
        func (Callable): Module-level function taking one item.
        items (Sequence): Work items.
        threads (int, optional): Worker count; None means default_thread_count().
        progress (bool): Show a tqdm bar on stderr.
        label (str): Progress bar description.

    Returns:
        list: func(item) for every item, in input order.
    """
    items = list(items)
    workers = default_thread_count() if threads is None else max(1, threads)

    if workers == 1 or len(items) < PARALLEL_MIN_ITEMS:
        return [func(item) for item in tqdm(items, desc=label, disable=not progress, file=sys.stderr)]

    chunksize = max(1, len(items) // (workers * 4))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = pool.map(func, items, chunksize=chunksize)
        return list(tqdm(results, total=len(items), desc=label, disable=not progress, file=sys.stderr))
