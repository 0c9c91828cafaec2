import itertools
import random

import networkx as nx
import numpy as np
import pytest

from processes.P06_class_items import CapacityError, EdgeClass, TutteDomainError
from processes.P08_multigraph import (
    Multigraph, block_decompose, canonical_form, canonical_key, classify_edges, complement,
    contract_edge, delete_edge, find_ears, format_edge_list, identify_vertices, parse_edge_list,
    permute, remove_vertices,
)

TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
PAW = Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def test_edges_are_normalized_and_sorted():
    g = Multigraph(3, [(2, 0), (1, 0), (2, 0)])
    assert g.edges == ((0, 1), (0, 2), (0, 2))
    assert g.degrees() == [3, 1, 2]
    assert not g.is_simple()


def test_out_of_range_edge_rejected():
    with pytest.raises(TutteDomainError):
        Multigraph(2, [(0, 2)])


def test_loops_count_twice_in_degree_and_adjacency():
    g = Multigraph(2, [(0, 0), (0, 1)])
    assert g.degrees() == [3, 1]
    assert np.array_equal(g.adjacency_matrix(), np.array([[2, 1], [1, 0]]))


def test_delete_removes_one_copy():
    m3 = Multigraph(2, [(0, 1)] * 3)
    assert delete_edge(m3, (1, 0)).edges == ((0, 1), (0, 1))
    assert m3.contains_edge((1, 0)) and not TRIANGLE.contains_edge((0, 0))
    with pytest.raises(TutteDomainError):
        delete_edge(TRIANGLE, (1, 1))


def test_contract_turns_parallel_copies_into_loops():
    assert contract_edge(TRIANGLE, (0, 1)) == Multigraph(2, [(0, 1), (0, 1)])
    m3 = Multigraph(2, [(0, 1)] * 3)
    assert contract_edge(m3, (0, 1)) == Multigraph(1, [(0, 0), (0, 0)])
    with pytest.raises(TutteDomainError):
        contract_edge(Multigraph(1, [(0, 0)]), (0, 0))


def test_identify_maps_larger_index_onto_smaller():
    path = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
    assert identify_vertices(path, 3, 1) == Multigraph(3, [(0, 1), (1, 2), (1, 2)])


def test_remove_vertices_compacts():
    assert remove_vertices(PAW, [3]) == TRIANGLE
    assert remove_vertices(PAW, [0]) == Multigraph(3, [(0, 1)])


def test_components_and_connectivity():
    g = Multigraph(5, [(0, 1), (3, 4)])
    assert g.components() == [[0, 1], [2], [3, 4]]
    assert not g.is_connected()
    assert Multigraph(1).is_connected()
    assert not Multigraph(0).is_connected()


def test_classify_edges():
    labels = classify_edges(Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 3)]))
    assert labels[(0, 3)] is EdgeClass.BRIDGE
    assert labels[(3, 3)] is EdgeClass.LOOP
    assert labels[(0, 1)] is EdgeClass.ORDINARY
    assert classify_edges(Multigraph(2, [(0, 1), (0, 1)]))[(0, 1)] is EdgeClass.ORDINARY


def test_block_decompose_paw_with_loop():
    g = Multigraph(4, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 3)])
    blocks = block_decompose(g)
    assert sorted((b.vertex_count, b.edge_count) for b in blocks) == [(1, 1), (2, 1), (3, 3)]


def test_block_decompose_keeps_parallel_edges_together():
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2)])
    assert sorted(b.edges for b in block_decompose(g)) == [((0, 1),), ((0, 1), (0, 1))]


def test_block_decompose_needs_connected_graph():
    with pytest.raises(TutteDomainError):
        block_decompose(Multigraph(2))


def random_connected_multigraph(rng: random.Random, n: int) -> Multigraph:
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    for _ in range(rng.randint(0, n + 2)):
        u, v = rng.randrange(n), rng.randrange(n)
        edges.append((u, v))
    return Multigraph(n, edges)


def test_blocks_partition_the_edges():
    rng = random.Random(13)
    for _ in range(60):
        g = random_connected_multigraph(rng, rng.randint(1, 8))
        blocks = block_decompose(g)
        assert sum(block.edge_count for block in blocks) == g.edge_count
        for block in blocks:
            assert block.is_connected()
            if block.vertex_count > 2:
                assert nx.is_biconnected(block.simple_graph())


def test_bridges_are_exactly_the_k2_blocks():
    rng = random.Random(19)
    for _ in range(60):
        g = random_connected_multigraph(rng, rng.randint(2, 8))
        labels = classify_edges(g)
        bridges = [edge for edge, label in labels.items() if label is EdgeClass.BRIDGE]
        k2_blocks = [block for block in block_decompose(g) if (block.vertex_count, block.edge_count) == (2, 1)]
        assert len(bridges) == len(k2_blocks)
        for edge in bridges:
            assert not delete_edge(g, edge).is_connected()
        for edge, label in labels.items():
            if label is EdgeClass.ORDINARY:
                assert delete_edge(g, edge).is_connected()


def test_find_ears_theta():
    theta = Multigraph(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)])
    ears = find_ears(theta)
    assert len(ears) == 3
    assert all(ear.length == 2 and set(ear.endpoints) == {0, 1} and not ear.closed for ear in ears)


def test_find_ears_cycle_component_is_closed():
    ears = find_ears(Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert len(ears) == 1
    assert ears[0].closed and ears[0].length == 4


def test_find_ears_pendant_cycle_drops_closing_edge():
    ears = sorted(find_ears(PAW), key=lambda ear: ear.length)
    assert [ear.length for ear in ears] == [1, 2]
    assert ears[0].edges == ((0, 3),)
    assert ears[1].vertices == (0, 1, 2)
    assert ears[1].internal_vertices == (1,)


def test_canonical_key_is_isomorphism_invariant():
    g = Multigraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 4), (4, 4)])
    key = canonical_key(g)
    for perm in itertools.permutations(range(5)):
        assert canonical_key(permute(g, perm)) == key


def test_canonical_key_separates_classes():
    c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert canonical_key(c4) != canonical_key(PAW)
    assert canonical_key(Multigraph(2, [(0, 1)])) != canonical_key(Multigraph(2, [(0, 1), (0, 1)]))
    assert canonical_key(Multigraph(1, [(0, 0)])) != canonical_key(Multigraph(1))


def test_canonical_key_agrees_with_networkx_isomorphism():
    rng = random.Random(7)
    graphs = []
    for _ in range(40):
        edges = [pair for pair in itertools.combinations(range(6), 2) if rng.random() < 0.4]
        graphs.append(Multigraph(6, edges))
    for a, b in itertools.combinations(graphs, 2):
        same = nx.is_isomorphic(a.simple_graph(), b.simple_graph())
        assert (canonical_key(a) == canonical_key(b)) == same


def test_canonical_form_relabels_to_isomorphic_copy():
    key, relabeled = canonical_form(PAW)
    assert canonical_key(relabeled) == key
    assert nx.is_isomorphic(relabeled.simple_graph(), PAW.simple_graph())


def test_canonical_key_handles_symmetric_graphs():
    star = Multigraph(10, [(0, leaf) for leaf in range(1, 10)])
    relabeled = permute(star, [9, 0, 1, 2, 3, 4, 5, 6, 7, 8])
    assert canonical_key(star) == canonical_key(relabeled)


def test_canonical_bound():
    with pytest.raises(CapacityError):
        canonical_key(Multigraph(13))
    assert canonical_key(Multigraph(3), bound=3)


def test_complement_of_path():
    path = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
    assert nx.is_isomorphic(complement(path).simple_graph(), nx.path_graph(4))
    with pytest.raises(TutteDomainError):
        complement(Multigraph(2, [(0, 1), (0, 1)]))


def test_networkx_round_trip():
    g = Multigraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    assert Multigraph.from_networkx(g.to_networkx()) == g


def test_edge_list_round_trip_and_errors():
    text = "# triangle\n3 3\n0 1\n1 2\n\n2 0\n"
    assert parse_edge_list(text) == TRIANGLE
    assert parse_edge_list(format_edge_list(PAW)) == PAW
    with pytest.raises(TutteDomainError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(TutteDomainError):
        parse_edge_list("2 1\n0 5\n")
    with pytest.raises(TutteDomainError):
        parse_edge_list("2 1\n0 x\n")
