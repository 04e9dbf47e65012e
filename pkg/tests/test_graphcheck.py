import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusreal.graphcheck import (
    GRAPH_FAMILIES,
    Family,
    Graph,
    GraphError,
    block_decomposition,
    components,
    degree_sequence_of,
    euler_cycle_identity,
    is_bipartite,
    is_connected,
    is_member,
    profile,
    read_graph,
    verify_realization,
    write_graph,
)
from cactusreal.seqcore import parse_sequence
from figures import (
    bi_unicyclic_base,
    block_figure,
    bowtie,
    correction_figure,
    cycle,
    k4,
    star,
)
from strategies import random_member, shuffled


def test_graph_normalizes_and_rejects_bad_edges():
    g = Graph(3, [(2, 1), (3, 2)])
    assert g.edges == ((1, 2), (2, 3))
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 2), (2, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 4)])


def test_column_backed_graph_matches_tuple_graph():
    g = Graph.from_columns(3, [1, 1, 2], [2, 3, 3])
    assert g.m == 3
    assert g == cycle(3)
    assert g.degrees() == [2, 2, 2]


def test_degree_sequence_of_examples():
    assert degree_sequence_of(cycle(3)).entries == (2, 2, 2)
    assert degree_sequence_of(bi_unicyclic_base()).entries == (3, 2, 2, 2, 2, 1)
    assert degree_sequence_of(star(4)).entries == (4, 1, 1, 1, 1)


def test_degree_sequence_of_rejects_isolated_vertex():
    with pytest.raises(GraphError):
        degree_sequence_of(Graph(3, [(1, 2)]))


def test_components_and_bipartite():
    g = Graph(5, [(1, 2), (3, 4), (4, 5)])
    assert sorted(map(sorted, components(g))) == [[1, 2], [3, 4, 5]]
    assert not is_connected(g)
    assert is_bipartite(cycle(6)) and not is_bipartite(cycle(5))


def test_block_decomposition_of_block_figure():
    g = block_figure()
    bd = block_decomposition(g)
    assert (g.n, g.m) == (14, 16)
    assert bd.cycle_count == 3
    assert sorted(len(c) for c in bd.cycle_blocks) == [3, 4, 5]
    assert len(bd.bridges) == 4
    assert len(bd.cut_vertices) == 6
    assert euler_cycle_identity(g)
    # block-cutpoint tree: one node per block and cut vertex, connected, acyclic
    nodes = len(bd.blocks) + len(bd.cut_vertices)
    assert len(bd.bc_edges) == nodes - 1


def test_cycle_blocks_list_vertices_in_cycle_order():
    bd = block_decomposition(cycle(5))
    (ring,) = bd.cycle_blocks
    edges = set(cycle(5).edges)
    for a, b in zip(ring, ring[1:] + ring[:1]):
        assert (min(a, b), max(a, b)) in edges


@pytest.mark.parametrize(
    "g, bridges, cycles, cuts",
    [(Graph(2, [(1, 2)]), 1, 0, 0), (cycle(4), 0, 1, 0), (bowtie(), 0, 2, 1)],
)
def test_block_decomposition_small(g, bridges, cycles, cuts):
    bd = block_decomposition(g)
    assert (len(bd.bridges), bd.cycle_count, len(bd.cut_vertices)) == (bridges, cycles, cuts)


def test_block_decomposition_needs_connected():
    with pytest.raises(GraphError):
        block_decomposition(Graph(4, [(1, 2), (3, 4)]))


def test_k4_is_not_a_cactus():
    assert not is_member(Family.CACTUS, k4())
    assert block_decomposition(k4()).other_blocks


def test_bowtie_membership():
    g = bowtie()
    assert is_member(Family.CACTUS, g)
    assert is_member(Family.BRIDGELESS_CACTUS, g)
    assert is_member(Family.TRIANGULATED_CACTUS, g)
    assert not is_member(Family.BICACTUS, g)


def test_correction_figure_membership():
    g = correction_figure()
    assert degree_sequence_of(g).entries == (4, 3, 2, 2, 2, 2, 2, 2, 1)
    assert g.m == 10
    assert is_member(Family.BICACTUS, g)
    assert is_member(Family.CORE_BICACTUS, g)
    assert not is_member(Family.BRIDGELESS_BICACTUS, g)


def test_core_cactus_needs_single_cyclic_core():
    # two triangles joined by a bridge
    g = Graph(6, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)])
    assert is_member(Family.CACTUS, g)
    assert not is_member(Family.CORE_CACTUS, g)


def test_trees_and_forests():
    path = Graph(3, [(1, 2), (2, 3)])
    assert is_member(Family.TREE, path) and is_member(Family.CACTUS, path)
    two = Graph(4, [(1, 2), (3, 4)])
    assert is_member(Family.FOREST, two) and not is_member(Family.TREE, two)
    single = Graph(1, [])
    assert is_member(Family.TREE, single)


def test_single_edge_is_in_tree_like_families():
    g = Graph(2, [(1, 2)])
    for fam in (Family.TREE, Family.CACTUS, Family.BICACTUS, Family.CORE_CACTUS):
        assert is_member(fam, g)
    assert not is_member(Family.UNICYCLIC, g)


def test_is_member_rejects_forcibly_families():
    with pytest.raises(ValueError):
        is_member(Family.FORCIBLY_BICACTUS, cycle(4))


def test_euler_identity_examples():
    assert euler_cycle_identity(cycle(3))
    assert euler_cycle_identity(star(5))
    with pytest.raises(GraphError):
        euler_cycle_identity(k4())


def test_verify_realization_examples():
    d = parse_sequence("3,2^4,1")
    assert verify_realization(Family.BICACTUS, d, bi_unicyclic_base())
    # same degrees, odd cycle: triangle 1-2-3 with path 1-4-5-6
    odd = Graph(6, [(1, 2), (2, 3), (1, 3), (1, 4), (4, 5), (5, 6)])
    assert degree_sequence_of(odd).entries == d.entries
    assert not verify_realization(Family.BICACTUS, d, odd)
    assert verify_realization(Family.CACTUS, parse_sequence("2,2,2"), cycle(3))
    assert not verify_realization(Family.CACTUS, parse_sequence("2,2,2,2"), cycle(3))


def test_graph_file_round_trip():
    g = correction_figure()
    text = write_graph(g)
    assert text.splitlines()[0] == "9 10"
    assert read_graph(text) == g
    assert write_graph(cycle(3)) == "3 3\n1 2\n1 3\n2 3\n"


@pytest.mark.parametrize(
    "text",
    ["", "3\n1 2\n", "3 2\n1 2\n", "3 1\n1 x\n", "3 1\n1 2 3\n", "2 1\n1 1\n"],
)
def test_read_graph_errors(text):
    with pytest.raises(GraphError):
        read_graph(text)


def test_family_parse_aliases():
    assert Family.parse("bi-cactus") is Family.BICACTUS
    assert Family.parse("Bridgeless_BiCactus") is Family.BRIDGELESS_BICACTUS
    assert Family.parse("forcibly-bipartite-unicyclic") is Family.FORCIBLY_BI_UNICYCLIC
    with pytest.raises(ValueError):
        Family.parse("planar")


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GRAPH_FAMILIES), st.integers(2, 40), st.randoms(use_true_random=False))
def test_generated_members_are_members(family, n, rnd):
    g = shuffled(random_member(family, n, random.Random(rnd.random())), rnd)
    p = profile(g)
    assert p.member(family)
    if p.member(Family.CACTUS):
        assert euler_cycle_identity(g)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GRAPH_FAMILIES), st.integers(2, 40), st.randoms(use_true_random=False))
def test_family_containments(family, n, rnd):
    p = profile(random_member(family, n, random.Random(rnd.random())))
    if p.member(Family.TRIANGULATED_CACTUS):
        assert p.member(Family.BRIDGELESS_CACTUS)
    if p.member(Family.BRIDGELESS_CACTUS):
        assert p.member(Family.CORE_CACTUS)
    if p.member(Family.CORE_CACTUS):
        assert p.member(Family.CACTUS)
    pairs = [
        (Family.BICACTUS, Family.CACTUS),
        (Family.CORE_BICACTUS, Family.CORE_CACTUS),
        (Family.BRIDGELESS_BICACTUS, Family.BRIDGELESS_CACTUS),
        (Family.BI_UNICYCLIC, Family.UNICYCLIC),
    ]
    for bi, plain in pairs:
        assert p.member(bi) == (p.member(plain) and p.bipartite)
