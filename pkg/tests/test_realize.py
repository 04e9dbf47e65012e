import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cactusreal.decide import decide
from cactusreal.graphcheck import (
    GRAPH_FAMILIES,
    Family,
    Graph,
    block_decomposition,
    components,
    profile,
    verify_realization,
)
from cactusreal.realize import (
    NotRealizableError,
    RealizationError,
    RealizationState,
    construct,
    realize,
)
from cactusreal.seqcore import parse_sequence
from figures import bowtie, cycle
from strategies import random_accepted


def residual(s):
    return sorted((r for r in s.residual if r), reverse=True)


def edges(s):
    return sorted(tuple(sorted(e)) for e in zip(s.us, s.vs))


# -- primitives ---------------------------------------------------------------


def test_leaf_onto_three():
    s = RealizationState([3, 2, 2, 2, 1])
    s.attach_leaf(0)
    assert edges(s) == [(0, 4)]
    assert residual(s) == [2, 2, 2, 2]


def test_leaf_path_tail():
    s = RealizationState([2, 1])
    s.attach_leaf(0)
    assert residual(s) == [1]


def test_leaf_three_times_is_a_star():
    s = RealizationState([3, 1, 1, 1])
    s.attach_leaf(0, times=3)
    assert edges(s) == [(0, 1), (0, 2), (0, 3)]
    assert s.alive == 0 and s.steps == 3


def test_leaf_without_leaves():
    with pytest.raises(RealizationError):
        RealizationState([2, 2, 2]).attach_leaf(0)


def test_triangle_then_close_gives_bowtie():
    s = RealizationState([4, 2, 2, 2, 2])
    s.attach_triangle(0)
    assert residual(s) == [2, 2, 2]
    s.close_cycle(s.remaining_twos())
    assert Graph(5, [(u + 1, v + 1) for u, v in edges(s)]) == bowtie()


def test_triangle_needs_target_outside_the_twos():
    s = RealizationState([2, 2, 2])
    with pytest.raises(RealizationError):
        s.attach_triangle(0)
    s.close_cycle([0, 1, 2])
    assert s.alive == 0


def test_triangle_on_smallest_odd():
    s = RealizationState([4, 3, 2, 2, 2, 1])
    t = s.smallest_odd()
    assert s.residual[t] == 3
    s.attach_triangle(t)
    assert s.residual[t] == 1


def test_c4_onto_four():
    s = RealizationState([4, 2, 2, 2, 2, 2, 2])
    s.attach_c4(0)
    assert residual(s) == [2, 2, 2, 2]
    assert len(edges(s)) == 4


def test_c4_on_smallest_odd():
    s = RealizationState([3, 2, 2, 2, 2, 1])
    s.attach_c4(s.smallest_odd())
    assert residual(s) == [2, 1, 1]


def test_c4_with_two_twos_fails():
    with pytest.raises(RealizationError):
        RealizationState([4, 2, 2, 1, 1]).attach_c4(0)


def test_correction_on_worked_example():
    s = RealizationState([4, 3, 2, 2, 2, 2, 2, 2, 1])
    s.attach_correction_path(1)
    # two bridges: target to a 2, that 2 to the leaf
    assert len(edges(s)) == 2
    assert residual(s) == [4, 2, 2, 2, 2, 2, 2]
    assert s.m == 8 and s.corrections == 1


def test_correction_bi_unicyclic_base():
    s = RealizationState([3, 2, 2, 2, 2, 1])
    s.attach_correction_path(0)
    assert residual(s) == [2, 2, 2, 2]
    s.close_cycle(s.remaining_twos())
    g = Graph(6, [(u + 1, v + 1) for u, v in edges(s)])
    assert profile(g).cycle_lengths == (4,)


def test_correction_without_twos():
    with pytest.raises(RealizationError):
        RealizationState([3, 1, 1, 1]).attach_correction_path(0)


@pytest.mark.parametrize("k", [3, 6])
def test_close_cycle(k):
    s = RealizationState([2] * k)
    s.close_cycle(range(k))
    assert Graph(k, [(u + 1, v + 1) for u, v in edges(s)]) == cycle(k)


def test_close_cycle_is_family_blind():
    s = RealizationState([2] * 5)
    s.close_cycle(range(5))
    assert len(edges(s)) == 5


@pytest.mark.parametrize("degrees, vs", [([2, 2], [0, 1]), ([3, 2, 2, 1], [0, 1, 2])])
def test_close_cycle_errors(degrees, vs):
    with pytest.raises(RealizationError):
        RealizationState(degrees).close_cycle(vs)


def test_edges_never_repeat_on_batches():
    s = RealizationState([9] + [2] * 8 + [1])
    s.attach_triangle(0, times=4)
    s.attach_leaf(0)
    assert s.alive == 0 and s.steps == 5
    assert len(set(edges(s))) == 13


# -- realize ------------------------------------------------------------------


def test_realize_worked_bicactus_example():
    d = parse_sequence("4,3,2^6,1")
    g = realize(Family.BICACTUS, d)
    assert g.m == 10
    assert verify_realization(Family.BICACTUS, d, g)
    assert construct(Family.BICACTUS, d).corrections == 1


def test_realize_triangle():
    assert realize(Family.CACTUS, parse_sequence("2,2,2")) == cycle(3)


def test_realize_triangulated_bowtie():
    g = realize(Family.TRIANGULATED_CACTUS, parse_sequence("4,2^4"))
    assert profile(g).cycle_lengths == (3, 3)
    assert g == bowtie()


def test_realize_bi_unicyclic_base():
    d = parse_sequence("3,2^4,1")
    g = realize(Family.BI_UNICYCLIC, d)
    assert profile(g).cycle_lengths == (4,)
    assert len(block_decomposition(g).bridges) == 2


def test_realize_rejects_with_verdict():
    with pytest.raises(NotRealizableError) as info:
        realize(Family.CACTUS, parse_sequence("3,3,2,2"))
    assert info.value.verdict.rule == "R9"


def test_realize_maps_back_to_input_positions():
    d = parse_sequence("1,2,3,2,2,2")
    g = realize(Family.BI_UNICYCLIC, d)
    assert g.degrees() == [1, 2, 3, 2, 2, 2]


def test_forest_has_right_component_count():
    d = parse_sequence("3,2,1^7")
    g = realize(Family.FOREST, d)
    n, m = d.n, d.volume // 2
    assert len(components(g)) == n - m


def test_single_edge_families():
    d = parse_sequence("1,1")
    for fam in (Family.TREE, Family.CACTUS, Family.BICACTUS, Family.CORE_BICACTUS):
        assert realize(fam, d).edges == ((1, 2),)


def test_forcibly_bicactus_double_star():
    d = parse_sequence("3,3,1^4")
    g = realize(Family.FORCIBLY_BICACTUS, d)
    assert verify_realization(Family.FORCIBLY_BICACTUS, d, g)


def test_realize_is_deterministic():
    d = parse_sequence("6,5,4,3^3,2^5,1^8")
    assert realize(Family.CACTUS, d) == realize(Family.CACTUS, d)


def test_unicyclic_is_closed_caterpillar():
    d = parse_sequence("4,3,3,2,2,1^4")
    g = realize(Family.UNICYCLIC, d)
    (ring,) = block_decomposition(g).cycle_blocks
    deg = g.degrees()
    assert all(v in ring for v in range(1, g.n + 1) if deg[v - 1] >= 2)


@settings(max_examples=400, deadline=None)
@given(st.sampled_from(list(Family)), st.integers(0, 2**32))
def test_accepted_sequences_realize(family, seed):
    rng = random.Random(seed)
    d = random_accepted(family, 60, rng)
    assert decide(family, d).realizable
    g = realize(family, d)
    assert g.degrees() == d.original_order()
    assert verify_realization(family, d, g)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([Family.CACTUS, Family.BICACTUS]), st.integers(0, 2**32))
def test_step_count_and_cycle_shapes(family, seed):
    d = random_accepted(family, 300, random.Random(seed))
    s = construct(family, d)
    assert s.steps <= d.n
    lengths = profile(realize(family, d)).cycle_lengths
    usual = 3 if family is Family.CACTUS else 4
    assert sum(1 for k in lengths if k != usual) <= 1
    assert s.corrections <= 1


def test_graph_families_constant_is_complete():
    forcibly = {Family.FORCIBLY_BICACTUS, Family.FORCIBLY_BI_UNICYCLIC}
    assert set(GRAPH_FAMILIES) | forcibly == set(Family)
