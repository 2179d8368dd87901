import pytest

from atnlab import (Factorization, complete, complete_bipartite,
                    format_factorization, one_factorize_complete,
                    one_factorize_regular_bipartite, parse_factorization,
                    random_regular_bipartite, validate_factorization)


def test_round_robin_k4_golden():
    f = one_factorize_complete(4)
    by_pairs = [sorted(f.base.edges[i] for i in fac) for fac in f.factors]
    assert by_pairs == [
        [(0, 3), (1, 2)],
        [(0, 2), (1, 3)],
        [(0, 1), (2, 3)],
    ]


def test_round_robin_all_small_orders():
    for order in (2, 4, 6, 8, 10):
        f = one_factorize_complete(order)
        assert len(f.factors) == order - 1
        ok, why = validate_factorization(f)
        assert ok, why
    with pytest.raises(ValueError):
        one_factorize_complete(5)
    with pytest.raises(ValueError):
        one_factorize_complete(0)


def test_bipartite_factorization():
    for a in (1, 2, 3, 4):
        f = one_factorize_regular_bipartite(complete_bipartite(a, a))
        assert len(f.factors) == a
        ok, why = validate_factorization(f)
        assert ok, why
    for side, degree, seed in [(4, 2, 5), (5, 3, 6), (4, 4, 7)]:
        g = random_regular_bipartite(side, degree, seed)
        f = one_factorize_regular_bipartite(g)
        assert len(f.factors) == degree
        ok, why = validate_factorization(f)
        assert ok, why


def test_bipartite_factorization_rejects_bad_inputs():
    with pytest.raises(ValueError):
        one_factorize_regular_bipartite(complete(4))  # odd cycles
    with pytest.raises(ValueError):
        one_factorize_regular_bipartite(complete_bipartite(2, 3))  # not regular


def test_validate_rejects_each_violation():
    g = complete(4)
    base = one_factorize_complete(4)
    # duplicated edge across factors
    dup = Factorization(g, (base.factors[0], base.factors[0], base.factors[2]))
    ok, why = validate_factorization(dup)
    assert not ok and "more than one" in why
    # a factor that is not a matching
    e01, e02 = g.edge_index[(0, 1)], g.edge_index[(0, 2)]
    e13, e23 = g.edge_index[(1, 3)], g.edge_index[(2, 3)]
    e03, e12 = g.edge_index[(0, 3)], g.edge_index[(1, 2)]
    shared = Factorization(g, ((e01, e02), (e13, e23), (e03, e12)))
    ok, why = validate_factorization(shared)
    assert not ok and "not a matching" in why
    # factor missing a vertex
    sparse = Factorization(g, ((e01,), (e02, e13), (e03, e12)))
    ok, why = validate_factorization(sparse)
    assert not ok and "cover every vertex" in why
    # edges left out entirely
    partial = Factorization(g, (base.factors[0], base.factors[1]))
    ok, why = validate_factorization(partial)
    assert not ok and "cover every edge" in why


def test_factor_of_edge():
    f = one_factorize_complete(6)
    owner = f.factor_of_edge()
    for fi, fac in enumerate(f.factors):
        for e in fac:
            assert owner[e] == fi
    assert len(owner) == f.base.m


def test_factorization_validates_indices():
    g = complete(4)
    with pytest.raises(ValueError):
        Factorization(g, ((0, 99),))


def test_format_parse_round_trip():
    for build in (lambda: one_factorize_complete(6),
                  lambda: one_factorize_regular_bipartite(complete_bipartite(3, 3))):
        f = build()
        again = parse_factorization(format_factorization(f), f.base)
        assert again == f
    f = one_factorize_complete(4)
    with pytest.raises(ValueError):
        parse_factorization("0 1\n2 99\n", f.base)
