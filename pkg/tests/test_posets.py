import pytest

from starconv import FinitePoset, NotAPosetError, StarconvError, make_poset


def test_one_object_discrete():
    poset = make_poset(["x"], [])
    assert poset.is_discrete
    assert poset.leq(0, 0)


def test_two_chain():
    poset = make_poset(["a", "b"], [("a", "b")])
    assert poset.leq(0, 1)
    assert not poset.leq(1, 0)
    assert not poset.is_discrete


def test_antisymmetry_violation():
    with pytest.raises(NotAPosetError):
        make_poset(["a", "b"], [("a", "b"), ("b", "a")])


def test_transitive_closure():
    poset = make_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert poset.leq(0, 2)


def test_cycle_through_closure_detected():
    with pytest.raises(NotAPosetError):
        make_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_duplicate_labels_rejected():
    with pytest.raises(StarconvError):
        make_poset(["a", "a"], [])


def test_unknown_pair_label_rejected():
    with pytest.raises(StarconvError):
        make_poset(["a"], [("a", "zz")])


def test_direct_constructor_validates_transitivity():
    le = (
        (True, True, False),
        (False, True, True),
        (False, False, True),
    )
    with pytest.raises(NotAPosetError):
        FinitePoset(("a", "b", "c"), le)


def test_direct_constructor_validates_reflexivity():
    with pytest.raises(NotAPosetError):
        FinitePoset(("a",), ((False,),))


def test_relation_pairs_lexicographic():
    poset = make_poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert poset.relation_pairs() == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
    assert poset.strict_pairs() == [(0, 1), (0, 2), (1, 2)]


def test_index_lookup():
    poset = make_poset(["a", "b"], [])
    assert poset.index("b") == 1
    with pytest.raises(StarconvError):
        poset.index("zz")


def test_equality_is_structural():
    assert make_poset(["a", "b"], [("a", "b")]) == make_poset(["a", "b"], [("a", "b")])
    assert make_poset(["a", "b"], []) != make_poset(["a", "b"], [("a", "b")])
