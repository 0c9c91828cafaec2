from processes.P01_set_file_paths import (
    cache_bytes_env_var, ear_reduction_env_var, exports_folder, resolve_output_path, threads_env_var,
)
from processes.P02_system_processes import cache_byte_limit, default_thread_count, ear_reduction_setting, parallel_map
from processes.P08_multigraph import canonical_key
from processes.P10_families import Cycle, build


def test_parallel_map_matches_sequential():
    graphs = [build(Cycle(n)) for n in range(3, 11)] * 10
    sequential = parallel_map(canonical_key, graphs, threads=1)
    assert parallel_map(canonical_key, graphs, threads=2) == sequential
    assert parallel_map(canonical_key, [], threads=2) == []


def test_thread_count_from_environment(monkeypatch):
    monkeypatch.setenv(threads_env_var, "3")
    assert default_thread_count() == 3
    monkeypatch.setenv(threads_env_var, "0")
    assert default_thread_count() == 1
    monkeypatch.setenv(threads_env_var, "many")
    assert default_thread_count() >= 1
    monkeypatch.delenv(threads_env_var)
    assert default_thread_count() >= 1


def test_cache_limit_from_environment(monkeypatch):
    monkeypatch.delenv(cache_bytes_env_var, raising=False)
    assert cache_byte_limit() is None
    monkeypatch.setenv(cache_bytes_env_var, "4096")
    assert cache_byte_limit() == 4096
    monkeypatch.setenv(cache_bytes_env_var, "lots")
    assert cache_byte_limit() is None


def test_output_paths(tmp_path):
    assert resolve_output_path("poset.json") == exports_folder / "poset.json"
    target = tmp_path / "nested" / "poset.dot"
    assert resolve_output_path(str(target)) == target


def test_ear_reduction_from_environment(monkeypatch):
    monkeypatch.delenv(ear_reduction_env_var, raising=False)
    assert ear_reduction_setting() is None
    for raw, expected in [("0", False), ("off", False), ("1", True), ("Yes", True), ("sometimes", None)]:
        monkeypatch.setenv(ear_reduction_env_var, raw)
        assert ear_reduction_setting() is expected
