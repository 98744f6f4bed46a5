import itertools

import pytest

from valuelattice.errors import UnknownIndex, ValueNotInDimension
from valuelattice.inner_state import make_state
from valuelattice.meta import VDIM, DimSpecValue, MetaVerdict, attach_vdim, classify, vdim_spec
from valuelattice.value_model import base, make_lrv


@pytest.fixture(scope="module")
def lrv():
    return make_lrv([
        ("V1", base("A", "a")),
        ("V2", base("B", "b")),
        ("V3", base("C", "c")),
        (VDIM, vdim_spec(5)),
    ])


@pytest.fixture
def two_dims(lrv):
    return make_state(lrv, {"V1": "a", "V2": "b"})


def test_attach_grows_domain(two_dims):
    k = attach_vdim(two_dims, DimSpecValue({3}))
    assert len(k.domain) == 3
    assert classify(k).specified


def test_attach_replaces(two_dims):
    k = attach_vdim(attach_vdim(two_dims, {3}), {2, 4})
    assert len(k.domain) == 3
    assert classify(k) == MetaVerdict(True, ambiguous=True, consistent=False)


def test_attach_needs_vdim_dimension():
    plain = make_lrv([("V1", base("A", "a"))])
    with pytest.raises(UnknownIndex):
        attach_vdim(make_state(plain, {"V1": "a"}), {1})


def test_attach_out_of_range(two_dims):
    with pytest.raises(ValueNotInDimension):
        attach_vdim(two_dims, {9})


def test_dim_spec_value_validation():
    with pytest.raises(ValueError):
        DimSpecValue(set())
    with pytest.raises(ValueError):
        DimSpecValue({-1})


def test_classify_examples(two_dims):
    assert classify(attach_vdim(two_dims, {3})) == MetaVerdict(True, False, True)
    assert classify(attach_vdim(two_dims, {2, 4})) == MetaVerdict(True, True, False)
    unspecified = classify(two_dims)
    assert unspecified == MetaVerdict(False)
    assert unspecified.ambiguous is None and unspecified.consistent is None


def test_counting_convention_switch(two_dims):
    k = attach_vdim(two_dims, {2})
    assert not classify(k).consistent
    assert classify(k, count_vdim=False).consistent


def test_verdict_text(two_dims):
    assert str(classify(two_dims)) == "unspecified"
    assert str(classify(attach_vdim(two_dims, {2, 4}))) == "specified, ambiguous, inconsistent"


def test_consistency_after_adding_a_dimension(lrv):
    # adding one dimension keeps consistency exactly when the new count is admissible
    for admissible in itertools.chain.from_iterable(
        itertools.combinations(range(6), r) for r in (1, 2, 3)
    ):
        before = attach_vdim(make_state(lrv, {"V1": "a"}), admissible)
        after = before.with_value("V2", "b")
        assert classify(after).consistent == (len(after.domain) in admissible)
        assert classify(before).consistent == (len(before.domain) in admissible)
