# Import Libraries that are required to adjust sys path
import sys                      # Provides access to system-specific parameters and functions
from pathlib import Path        # Offers an object-oriented interface for filesystem paths

# Adjust sys.path so tests can import processes/ and main/
sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.dont_write_bytecode = True  # Prevents _pycache_ creation

import pytest

from processes.P01_set_file_paths import threads_env_var
from processes.P09_tutte_engine import configure_engine


@pytest.fixture(autouse=True)
def sequential_engine(monkeypatch):
    # process pools are exercised explicitly in test_P02; everything else runs in-process
    monkeypatch.setenv(threads_env_var, "1")
    configure_engine()
    yield
