import itertools

import pytest
from hypothesis import given, settings

from conftest import oracle_join, pairs_of, posets, warshall
from valuelattice.errors import CycleError, SizeExceeded, UnknownElement
from valuelattice.poset import ElementId, antichain, build_poset, chain, symbols
from valuelattice.value_model import Power, base, eval_spec

a, b, c, d, x, y = symbols("a", "b", "c", "d", "x", "y")


@pytest.fixture
def diamond():
    # a at the bottom, b and c incomparable, d on top
    return build_poset([a, b, c, d], [(a, b), (a, c), (b, d), (c, d)])


@pytest.fixture
def butterfly():
    return build_poset([a, b, x, y], [(a, x), (a, y), (b, x), (b, y)])


def test_element_identity_includes_context():
    assert ElementId("x") == ElementId("x", ())
    assert ElementId("x", ("V1",)) != ElementId("x", ("V2",))
    assert ElementId("x", ("V1",)) != ElementId("x")


def test_chain_closure():
    p = chain("a", "b", "c")
    assert p.leq(a, c)
    assert not p.leq(c, a)


def test_two_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset([a, b], [(a, b), (b, a)])


def test_longer_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset([a, b, c], [(a, b), (b, c), (c, a)])


def test_unknown_element_in_relation():
    with pytest.raises(UnknownElement):
        build_poset([a, b], [(a, c)])
    with pytest.raises(UnknownElement):
        chain("a", "b").leq(a, c)


def test_empty_carrier_rejected():
    with pytest.raises(ValueError):
        build_poset([], [])


def test_diamond_has_nine_pairs(diamond):
    # oracle: Warshall closure over indices
    closed = warshall(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    expected = sum(row.count(True) for row in closed)
    assert expected == 9
    assert len(diamond.pairs) == 9
    assert sum(1 for p, q in diamond.pairs if p != q) == 5


def test_leq_examples(diamond):
    assert not antichain("a", "b").leq(a, b)
    assert not diamond.leq(b, c)
    assert diamond.leq(a, d)


def test_join_examples(diamond, butterfly):
    assert chain("a", "b", "c").join(a, b) == b
    assert antichain("a", "b").join(a, b) is None
    assert butterfly.join(a, b) is None
    assert oracle_join(butterfly.pairs, butterfly.elements, a, b) is None
    assert diamond.join(b, c) == d


def test_is_total(diamond):
    assert chain("a", "b", "c").is_total()
    assert not antichain("a", "b").is_total()
    assert not diamond.is_total()


def test_strict_down_set(diamond):
    assert chain("a", "b", "c").strict_down_set(c) == {a, b}
    assert chain("a", "b", "c").strict_down_set(a) == frozenset()
    assert diamond.strict_down_set(d) == {a, b, c}


def test_is_join_semilattice(diamond):
    assert eval_spec(Power(base("S", "p", "q", "r"))).is_join_semilattice()
    assert not antichain("a", "b").is_join_semilattice()
    assert diamond.is_join_semilattice()


def test_hasse(diamond):
    assert chain("a", "b", "c").hasse() == ((a, b), (b, c))
    assert antichain("a", "b").hasse() == ()
    assert set(diamond.hasse()) == {(a, b), (a, c), (b, d), (c, d)}


def test_minimal_and_maximal(diamond):
    assert diamond.minimal() == (a,)
    assert diamond.maximal() == (d,)


def test_size_cap():
    with pytest.raises(SizeExceeded):
        build_poset(symbols(*"abcde"), max_carrier=4)


@settings(max_examples=150, deadline=None)
@given(posets())
def test_order_axioms(p):
    for u, v in pairs_of(p):
        if p.leq(u, v) and p.leq(v, u):
            assert u == v
        for w in p:
            if p.leq(u, v) and p.leq(v, w):
                assert p.leq(u, w)
    assert all(p.leq(u, u) for u in p)


@settings(max_examples=150, deadline=None)
@given(posets())
def test_join_laws(p):
    for u, v in pairs_of(p):
        j = p.join(u, v)
        assert j == p.join(v, u)
        assert j == oracle_join(p.pairs, p.elements, u, v)
        if p.leq(u, v):
            assert j == v
    assert all(p.join(u, u) == u for u in p)


@settings(max_examples=150, deadline=None)
@given(posets())
def test_hasse_round_trip(p):
    assert build_poset(p.elements, p.hasse()) == p


@settings(max_examples=150, deadline=None)
@given(posets())
def test_total_implies_semilattice(p):
    if p.is_total():
        assert p.is_join_semilattice()


def test_closure_matches_warshall_on_all_small_relations():
    es = symbols("0", "1", "2")
    off = [(i, j) for i in range(3) for j in range(3) if i != j]
    for r in range(len(off) + 1):
        for rel in itertools.combinations(off, r):
            m = warshall(3, rel)
            if any(m[i][j] and m[j][i] for i, j in off):
                with pytest.raises(CycleError):
                    build_poset(es, [(es[i], es[j]) for i, j in rel])
                continue
            p = build_poset(es, [(es[i], es[j]) for i, j in rel])
            assert p.pairs == {(es[i], es[j]) for i in range(3) for j in range(3) if m[i][j]}
