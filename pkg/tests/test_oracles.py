import pytest

from stripmwis.graph import Graph
from stripmwis.instances import random_graph
from stripmwis.oracles import (BudgetExceeded, StttEmbedding, find_induced_sttt,
                               find_induced_sttt_naive, mwis_brute, mwm_brute,
                               verify_sttt)


def path(n):
    return Graph.build(n, [(i, i + 1) for i in range(n - 1)])


def test_mwis_brute_small():
    g = Graph.build(3, [(0, 1), (0, 2), (1, 2)], [5, 1, 1])
    assert mwis_brute(g) == (5, frozenset({0}))
    assert mwis_brute(path(4)) == (2, frozenset({0, 2}))
    assert mwis_brute(Graph.build(0, [])) == (0, frozenset())


def test_mwis_brute_lex_tiebreak():
    # {0} and {0,3} both weigh 1; smaller set-as-tuple wins
    g = Graph.build(4, [(0, 1), (1, 2), (2, 3)], [1, 1, 1, 0])
    assert mwis_brute(g)[1] == frozenset({0, 2})  # weight 2 beats both
    g2 = Graph.build(2, [], [1, 0])
    assert mwis_brute(g2) == (1, frozenset({0}))


def test_mwis_brute_alive_and_budget():
    g = path(5)
    assert mwis_brute(g, alive={1, 2, 3})[0] == 2
    with pytest.raises(BudgetExceeded):
        mwis_brute(Graph.build(30, []), budget=26)


def test_mwm_brute():
    g = path(4)
    assert mwm_brute(g, {(0, 1): 3, (1, 2): 5, (2, 3): 3})[0] == 6
    assert mwm_brute(g, {(0, 1): -1, (1, 2): -2, (2, 3): -3}) == (0, set())
    with pytest.raises(ValueError):
        mwm_brute(g, {(0, 2): 1})


def test_verify_sttt_direct():
    # S_{1,1,1} = claw
    g = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
    emb = StttEmbedding(0, ((1,), (2,), (3,)))
    assert verify_sttt(g, emb, 1)
    assert not verify_sttt(g, StttEmbedding(1, ((0,), (2,), (3,))), 1)


def test_detector_finds_claw_and_spider():
    g = Graph.build(4, [(0, 1), (0, 2), (0, 3)])
    assert find_induced_sttt(g, 1) is not None
    # spider with three legs of length 2
    edges = [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]
    g2 = Graph.build(7, edges)
    emb = find_induced_sttt(g2, 2)
    assert emb is not None and emb.center == 0
    assert find_induced_sttt(g2, 3) is None


def test_detector_negative_cases():
    assert find_induced_sttt(path(10), 1) is None       # paths have no claw
    k4 = Graph.build(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert find_induced_sttt(k4, 1) is None


def test_detector_matches_naive_on_sample():
    for i in range(12):
        g = random_graph(7, 0.3, 4000 + i)
        for t in (1, 2):
            fast = find_induced_sttt(g, t)
            slow = find_induced_sttt_naive(g, t)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert verify_sttt(g, fast, t)
