import random

from hypothesis import given, settings, strategies as st

from greenbridges.habitat_graph import HabitatGraph
from greenbridges.setpacking import brute_force_set_packing, max_weight_set_packing
from greenbridges.timing import Deadline


def _random_hg(rnd, nodes=8, count=12, size=3):
    return HabitatGraph.from_hyperedges(nodes, [(rnd.sample(range(nodes), rnd.randint(1, min(size, nodes))),
                                                 rnd.randint(1, 8)) for _ in range(count)])


def test_matches_brute_force():
    rnd = random.Random(11)
    for _ in range(300):
        hg = _random_hg(rnd, nodes=rnd.randint(2, 10), count=rnd.randint(0, 16))
        m = max_weight_set_packing(hg)
        assert m.optimal and hg.is_matching(m.edges)
        assert m.weight == brute_force_set_packing(hg).weight


def test_expired_deadline_reports_bound():
    rnd = random.Random(3)
    hg = _random_hg(rnd, nodes=12, count=18)
    d = Deadline(0.0)
    m = max_weight_set_packing(hg, d)
    assert hg.is_matching(m.edges)
    if not m.optimal:
        assert m.upper_bound >= brute_force_set_packing(hg).weight >= m.weight


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.sets(st.integers(0, 6), min_size=1, max_size=3), st.integers(1, 9)), max_size=12))
def test_packing_property(items):
    hg = HabitatGraph.from_hyperedges(7, items)
    m = max_weight_set_packing(hg)
    assert m.weight == sum(hg.hyperedges[p].weight for p in m.edges)
    assert m.weight == brute_force_set_packing(hg).weight
