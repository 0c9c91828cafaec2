import networkx as nx
import pytest

from processes.P06_class_items import CapacityError, ClassSpec
from processes.P08_multigraph import canonical_key
from processes.P11_enumerator import count_connected, enumerate_connected, enumerate_connected_labeled

CONNECTED_COUNTS = {
    5: [3, 5, 5, 4, 2, 1, 1],
    6: [6, 13, 19, 22, 20, 14, 9, 5, 2, 1, 1],
}


def test_smallest_classes():
    assert [g.edge_count for g in enumerate_connected(ClassSpec(1, 0))] == [0]
    assert len(enumerate_connected(ClassSpec(2, 1))) == 1
    assert len(enumerate_connected(ClassSpec(3, 2))) == 1
    assert len(enumerate_connected(ClassSpec(3, 3))) == 1
    assert len(enumerate_connected(ClassSpec(4, 3))) == 2
    assert len(enumerate_connected(ClassSpec(4, 4))) == 2


def test_infeasible_classes_are_empty():
    assert enumerate_connected(ClassSpec(4, 2)) == []
    assert enumerate_connected(ClassSpec(4, 7)) == []
    assert enumerate_connected_labeled(ClassSpec(3, 1)) == []


@pytest.mark.parametrize("n", [5, 6])
def test_connected_counts(n):
    counts = [count_connected(ClassSpec(n, m), max_excess=10) for m in range(n - 1, n * (n - 1) // 2 + 1)]
    assert counts == CONNECTED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_agrees_with_labeled_scan(n):
    for m in range(n - 1, n * (n - 1) // 2 + 1):
        spec = ClassSpec(n, m)
        fast = [canonical_key(g) for g in enumerate_connected(spec, max_excess=10)]
        slow = [canonical_key(g) for g in enumerate_connected_labeled(spec)]
        assert fast == slow


def test_output_is_canonical_simple_connected_and_distinct():
    graphs = enumerate_connected(ClassSpec(6, 8))
    keys = [canonical_key(g) for g in graphs]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    for g in graphs:
        assert g.is_simple() and g.is_connected() and g.edge_count == 8
    for a, b in zip(graphs, graphs[1:]):
        assert not nx.is_isomorphic(a.simple_graph(), b.simple_graph())


@pytest.mark.slow
def test_unicyclic_counts():
    counts = [count_connected(ClassSpec(n, n)) for n in range(3, 10)]
    assert counts == [1, 2, 5, 13, 33, 89, 240]


def test_caps():
    with pytest.raises(CapacityError):
        enumerate_connected(ClassSpec(10, 9))
    with pytest.raises(CapacityError):
        enumerate_connected(ClassSpec(6, 11))
    dense = count_connected(ClassSpec(6, 11), max_excess=5)
    assert dense == 9
    assert dense == len(enumerate_connected_labeled(ClassSpec(6, 11)))
    complements = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6 and g.number_of_edges() == 15 - 11]
    assert dense == len(complements)
    with pytest.raises(CapacityError):
        enumerate_connected_labeled(ClassSpec(7, 6))
