import pytest
from hypothesis import given, settings, strategies as st

from stripmwis.blossom import WeightedMatchingInstance, max_weight_matching
from stripmwis.instances import random_graph
from stripmwis.oracles import mwm_brute


def test_rejects_bad_instances():
    with pytest.raises(ValueError):
        WeightedMatchingInstance(2, ((0, 0, 1),))
    with pytest.raises(ValueError):
        WeightedMatchingInstance(2, ((0, 1, 1), (1, 0, 2)))
    with pytest.raises(ValueError):
        WeightedMatchingInstance(2, ((0, 3, 1),))


def test_triangle():
    inst = WeightedMatchingInstance(3, ((0, 1, 4), (1, 2, 6), (0, 2, 5)))
    value, match = max_weight_matching(inst)
    assert value == 6 and match == {(1, 2)}


def test_negative_edges_ignored():
    inst = WeightedMatchingInstance(4, ((0, 1, -5), (2, 3, 2)))
    assert max_weight_matching(inst)[0] == 2


def test_matches_brute_on_seeded_corpus():
    import random
    rng = random.Random(42)
    for i in range(120):
        n = rng.randint(2, 10)
        g = random_graph(n, 0.5, 7000 + i)
        ew = {e: rng.randint(-10, 10) for e in g.edges}
        inst = WeightedMatchingInstance(
            n, tuple((u, v, ew[(u, v)]) for (u, v) in g.edges))
        assert max_weight_matching(inst)[0] == mwm_brute(g, ew)[0], i


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_matching_is_valid(data):
    n = data.draw(st.integers(2, 9))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=14))
    edges = tuple((u, v, data.draw(st.integers(-8, 8))) for (u, v) in chosen)
    inst = WeightedMatchingInstance(n, edges)
    value, match = max_weight_matching(inst)
    assert value >= 0
    wmap = {(u, v): w for (u, v, w) in edges}
    assert value == sum(wmap[e] for e in match)
    ends = [x for e in match for x in e]
    assert len(ends) == len(set(ends))
