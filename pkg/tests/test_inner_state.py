import itertools

import pytest

from valuelattice.errors import (
    LrvMismatch,
    NotInDomain,
    SizeExceeded,
    UnknownIndex,
    ValueNotInDimension,
)
from valuelattice.inner_state import (
    CompareResult,
    Infeasible,
    Transition,
    all_states,
    compare,
    compose,
    detect_incompatibility,
    make_state,
    potential_value,
    project,
    restrict,
)
from valuelattice.value_model import ElementsAsAtoms, Power, Product, base, make_lrv

F = base("F", "f1", "f2", "f3", "f4")
M = base("M", "m1", "m2", "m3")


@pytest.fixture(scope="module")
def lrv():
    return make_lrv([
        ("V1", Power(F)),
        ("V2", M),
        ("V5", ElementsAsAtoms((F, M, "f1", "b2"))),
        ("V6", Product((M, M, M))),
    ])


def brute_leq(k1, k2):
    """Order on states written out from the two defining clauses."""
    if not set(k1.assign) <= set(k2.assign):
        return False
    return all((k1.assign[i], k2.assign[i]) in k1.lrv[i].poset.pairs for i in k1.assign)


def test_make_state_example(lrv):
    k = make_state(lrv, {"V2": "m1", "V5": "M", "V6": ("m1", "m2", "m3")})
    assert k.domain == {"V2", "V5", "V6"}
    assert len(k.codomain) == 3


def test_empty_state_is_bottom(lrv):
    empty = make_state(lrv, {})
    assert len(empty) == 0
    k = make_state(lrv, {"V2": "m1"})
    assert compare(empty, k) is CompareResult.LESS_EQ


def test_value_not_in_dimension(lrv):
    with pytest.raises(ValueNotInDimension):
        make_state(lrv, {"V2": "b1"})
    with pytest.raises(UnknownIndex):
        make_state(lrv, {"V9": "m1"})


def test_project_returns_whole_components(lrv):
    k = make_state(lrv, {"V2": "m1", "V5": "M", "V6": ("m1", "m2", "m3")})
    v6 = project(k, "V6")
    assert v6.plain() == ("m1", "m2", "m3")
    assert v6 != lrv.element("V2", "m1")
    assert project(k, "V2") == lrv.element("V2", "m1")
    assert project(k, "V5").label == "M"
    with pytest.raises(NotInDomain):
        project(k, "V1")


def test_compare_examples(lrv):
    small = make_state(lrv, {"V1": {"f1"}})
    large = make_state(lrv, {"V1": {"f1", "f2"}, "V2": "m1"})
    other = make_state(lrv, {"V1": {"f2"}})
    assert compare(small, large) is CompareResult.LESS_EQ
    assert compare(large, small) is CompareResult.GREATER_EQ
    assert compare(small, other) is CompareResult.INCOMPARABLE
    assert compare(large, large) is CompareResult.EQUAL


def test_compare_across_lrvs(lrv):
    other = make_lrv([("V2", M)])
    with pytest.raises(LrvMismatch):
        compare(make_state(lrv, {}), make_state(other, {}))


def test_compose_examples(lrv):
    f1 = make_state(lrv, {"V1": {"f1"}})
    f2 = make_state(lrv, {"V1": {"f2"}})
    assert compose(f1, f2) == make_state(lrv, {"V1": {"f1", "f2"}})
    assert compose(make_state(lrv, {"V2": "m1"}), make_state(lrv, {"V2": "m2"})) == Infeasible("V2")
    assert compose(f1, make_state(lrv, {"V2": "m1"})) == make_state(lrv, {"V1": {"f1"}, "V2": "m1"})


def test_compose_witness_is_lowest_sorted(lrv):
    k1 = make_state(lrv, {"V2": "m1", "V6": ("m1", "m1", "m1")})
    k2 = make_state(lrv, {"V2": "m2", "V6": ("m2", "m2", "m2")})
    assert compose(k1, k2) == Infeasible("V2")


def test_restrict_examples(lrv):
    k = make_state(lrv, {"V1": {"f1"}, "V2": "m1"})
    assert restrict(k, k.domain) == k
    assert len(restrict(k, [])) == 0
    assert restrict(k, ["V2", "V9"]) == make_state(lrv, {"V2": "m1"})


def test_potential_value(lrv):
    assert len(potential_value(make_state(lrv, {"V1": {"f1"}, "V2": "m1"}))) == 3
    assert potential_value(make_state(lrv, {})) == set()
    k3 = make_state(lrv, {"V1": {"f1"}, "V2": "m1", "V5": "F"})
    labels = potential_value(k3)
    assert len(labels) == 7
    assert frozenset({"V1", "V2", "V5"}) in labels
    with pytest.raises(SizeExceeded):
        potential_value(k3, max_visibility=2)


def test_detect_incompatibility_examples(lrv):
    k = make_state(lrv, {"V1": {"f1", "f2"}, "V2": "m1"})
    assert not detect_incompatibility("V1", {"f1"}, k, k)
    hidden = make_state(lrv, {"V1": {"f1"}})
    assert not detect_incompatibility("V2", "m1", hidden, k)  # V2 outside the first domain
    # k_a sees V2, k_h does not, and they agree on V1
    k_a = make_state(lrv, {"V1": {"f1"}, "V2": "m1"})
    k_h = make_state(lrv, {"V1": {"f1", "f2"}})
    assert detect_incompatibility("V2", "m1", k_a, k_h)
    with pytest.raises(ValueNotInDimension):
        detect_incompatibility("V2", "b1", k_a, k_h)
    with pytest.raises(UnknownIndex):
        detect_incompatibility("V9", "m1", k_a, k_h)


def test_transition_label_checked(lrv):
    t = Transition.make(lrv, "psi1", "psi2", ["V1", "V2"])
    assert t.label == {"V1", "V2"}
    with pytest.raises(UnknownIndex):
        Transition.make(lrv, "psi1", "psi2", ["V9"])
    with pytest.raises(ValueError):
        Transition.make(lrv, "psi1", "psi2", [])


# -- exhaustive properties over a small LRV ---------------------------------

@pytest.fixture(scope="module")
def small():
    lrv = make_lrv([
        ("A", Power(base("S", "x", "y"))),
        ("B", base("C", "c1", "c2", "c3", order=[("c1", "c2")])),
        ("C", base("D", "d1", "d2", "d3", "d4", order=[("d1", "d2"), ("d1", "d3"), ("d2", "d4"), ("d3", "d4")])),
    ])
    return lrv, list(all_states(lrv))


def test_all_states_count(small):
    lrv, states = small
    assert len(states) == (4 + 1) * (3 + 1) * (4 + 1)


def test_compare_matches_brute_force(small):
    _, states = small
    for k1, k2 in itertools.product(states, repeat=2):
        r = compare(k1, k2)
        assert r.is_leq == brute_leq(k1, k2)
        assert r.is_geq == brute_leq(k2, k1)
        assert (r is CompareResult.EQUAL) == (k1 == k2)


def test_compose_is_least_upper_bound(small):
    _, states = small
    for k1, k2 in itertools.product(states, repeat=2):
        ub = [k for k in states if brute_leq(k1, k) and brute_leq(k2, k)]
        least = [k for k in ub if all(brute_leq(k, u) for u in ub)]
        result = compose(k1, k2)
        if isinstance(result, Infeasible):
            same_domain = [k for k in ub if k.domain == k1.domain | k2.domain]
            assert not same_domain
            assert result.witness in k1.domain & k2.domain
        else:
            assert least == [result]


def test_compose_algebra(small):
    _, states = small
    sample = states[::7]
    for k1, k2 in itertools.product(sample, repeat=2):
        assert compose(k1, k1) == k1
        assert compose(k1, k2) == compose(k2, k1)
        u = compose(k1, k2)
        if not isinstance(u, Infeasible):
            assert compare(k1, u).is_leq
        for k3 in sample[::5]:
            left = compose(k1, k2)
            right = compose(k2, k3)
            if isinstance(left, Infeasible) or isinstance(right, Infeasible):
                continue
            assert compose(left, k3) == compose(k1, right)


def test_explained_value_is_never_incompatible(small):
    lrv, states = small
    sample = states[::3]
    for k_a, k_h in itertools.product(sample, repeat=2):
        if not k_a.leq(k_h):
            continue
        for i in k_h.domain:
            for a in lrv[i].poset:
                assert not detect_incompatibility(i, a, k_a, k_h)


def test_project_round_trip(small):
    lrv, states = small
    for k in states[::11]:
        again = make_state(lrv, k.assign)
        for i in k.domain:
            assert project(again, i) == k.assign[i]
