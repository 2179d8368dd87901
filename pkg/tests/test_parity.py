import random

import pytest
from conftest import (brute_atn, brute_coefficient, brute_parity_diff,
                      random_graph, random_orientation)

from atnlab import (Budget, BudgetExceededError, Graph, Orientation,
                    ParityDiff, atn_via_orientations, coefficient,
                    coefficient_via_orientations, complete, cycle,
                    eulerian_orientation, eulerian_parity_diff,
                    orientation_sign, orientation_with_outdegrees, path,
                    verify_correspondence)


def test_parity_diff_value_object():
    pd = ParityDiff(3, 1)
    assert pd.diff == 2
    assert pd.to_json() == {"even": 3, "odd": 1, "diff": 2}
    with pytest.raises(ValueError):
        ParityDiff(0, 2)  # the empty subset is always balanced and even
    with pytest.raises(ValueError):
        ParityDiff(1, -1)


def test_parity_diff_goldens():
    # all arcs around a 4-cycle: balanced subsets are {} and the full cycle
    c4 = cycle(4)
    o = eulerian_orientation(c4)
    assert eulerian_parity_diff(o).to_json() == {"even": 2, "odd": 0, "diff": 2}
    # directed triangle: {} is even, the full 3-cycle is odd, so they cancel
    tri = Orientation.from_arcs(cycle(3), [(0, 1), (1, 2), (2, 0)])
    pd = eulerian_parity_diff(tri)
    assert (pd.even_count, pd.odd_count, pd.diff) == (1, 1, 0)
    # single arc: nothing to balance except {}
    one = Orientation(Graph.from_edges(2, [(0, 1)]), (0,))
    assert eulerian_parity_diff(one).diff == 1


def test_parity_diff_matches_subset_brute_force():
    rng = random.Random(608)
    for _ in range(40):
        g = random_graph(rng, max_n=6, max_m=10)
        o = random_orientation(rng, g)
        pd = eulerian_parity_diff(o)
        assert (pd.even_count, pd.odd_count) == brute_parity_diff(o)


def test_parity_respects_edge_cap():
    g = complete(8)  # 28 edges
    o = Orientation(g, tuple([0] * g.m))
    with pytest.raises(BudgetExceededError) as exc:
        eulerian_parity_diff(o, Budget(max_ms=None))
    assert exc.value.limit_kind == "parity_edges"
    # raising the cap instead trips the subset counter
    b = Budget(max_ms=None, max_parity_edges=30, max_subsets=1000)
    with pytest.raises(BudgetExceededError) as exc:
        eulerian_parity_diff(o, b)
    assert exc.value.limit_kind == "subsets"


def test_orientation_sign_counts_reversed_edges():
    g = cycle(4)
    assert orientation_sign(Orientation(g, (0, 0, 0, 0))) == 1
    assert orientation_sign(Orientation(g, (1, 0, 0, 0))) == -1
    assert orientation_sign(Orientation(g, (1, 1, 0, 1))) == -1
    assert orientation_sign(Orientation(g, (1, 1, 0, 0))) == 1


def test_signed_correspondence_on_random_pairs():
    # coefficient at the outdegree vector equals sign * (even - odd);
    # checked in absolute value first, then with the sign
    rng = random.Random(1127)
    for _ in range(60):
        g = random_graph(rng, max_n=7, max_m=11)
        o = random_orientation(rng, g)
        c = coefficient(g, o.out_degrees)
        pd = eulerian_parity_diff(o)
        assert abs(c) == abs(pd.diff)
        assert c == orientation_sign(o) * pd.diff


def test_coefficient_via_orientations_agrees_with_expansion():
    rng = random.Random(888)
    for _ in range(30):
        g = random_graph(rng, max_n=6, max_m=9)
        if g.n == 0:
            continue
        exps = [0] * g.n
        for i, (u, v) in enumerate(g.edges):
            exps[v if i % 3 else u] += 1
        target = tuple(exps)
        assert coefficient_via_orientations(g, target) == \
            brute_coefficient(g, target)
    assert coefficient_via_orientations(cycle(4), (1, 1, 1, 1)) == -2


def test_orientation_with_outdegrees():
    rng = random.Random(414)
    for _ in range(30):
        g = random_graph(rng, max_n=7, max_m=11)
        o = random_orientation(rng, g)
        realized = orientation_with_outdegrees(g, o.out_degrees)
        assert realized is not None
        assert realized.out_degrees == o.out_degrees
    g = path(3)
    assert orientation_with_outdegrees(g, (2, 0, 0)) is None
    assert orientation_with_outdegrees(g, (1, 1, 1)) is None  # sum too big
    with pytest.raises(ValueError):
        orientation_with_outdegrees(g, (1, 1))


def test_atn_via_orientations_matches_brute_force():
    rng = random.Random(9043)
    for _ in range(25):
        g = random_graph(rng, max_n=7, max_m=10)
        assert atn_via_orientations(g) == brute_atn(g)


def test_atn_via_orientations_known_values():
    assert atn_via_orientations(Graph.from_edges(5, [])) == 1
    assert atn_via_orientations(cycle(6)) == 2
    assert atn_via_orientations(cycle(7)) == 3
    assert atn_via_orientations(complete(5)) == 5


def test_atn_budget_carries_level_lower_bound():
    g = complete(6)
    with pytest.raises(BudgetExceededError) as exc:
        atn_via_orientations(g, Budget(max_ms=None, max_subsets=100))
    assert exc.value.limit_kind == "subsets"
    assert exc.value.atn_lower_bound == 4  # all levels below ceil(15/6) are empty


def test_verify_correspondence_report():
    g = cycle(4)
    o = eulerian_orientation(g)
    rep = verify_correspondence(g, o)
    assert rep["outdegrees"] == [1, 1, 1, 1]
    assert rep["coefficient"] == -2
    assert rep["parity"] == {"even": 2, "odd": 0, "diff": 2}
    assert rep["sign"] == -1
    assert rep["abs_match"] and rep["signed_match"]
    big = complete(7)  # 21 edges is past the direct-check cap
    with pytest.raises(ValueError):
        verify_correspondence(big, Orientation(big, tuple([0] * big.m)))
