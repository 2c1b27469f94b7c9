import pytest

from nlchroma.coloring import (
    Coloring,
    DisconnectedGraphError,
    distance_vector,
    is_dominating,
    is_ml,
    is_nl,
    is_proper,
    nr_tuple,
    nr_tuples,
)
from nlchroma.graph import complete, cycle, disjoint_union, empty, path
from nlchroma.solver import chi_nl_exact

K3_K1 = disjoint_union(complete(3), complete(1))


def test_coloring_canonical_order():
    c = Coloring.from_classes(3, [{2}, {0, 1}])
    assert c.classes == (frozenset({0, 1}), frozenset({2}))
    assert c.to_line() == "0 0 1"


@pytest.mark.parametrize("classes", [[{0}, set(), {1}], [{0, 1}, {1}], [{0}]])
def test_coloring_rejects_bad_partitions(classes):
    with pytest.raises(ValueError):
        Coloring.from_classes(2, classes)


def test_parse_rejects_negative():
    with pytest.raises(ValueError):
        Coloring.parse("0 -1")


def test_nr_tuple_examples():
    assert nr_tuple(path(3), Coloring.from_classes(3, [{0, 2}, {1}]), 0) == (0, 1)
    assert nr_tuple(K3_K1, Coloring.from_classes(4, [{0, 3}, {1}, {2}]), 3) == (0, 2, 2)
    c5 = Coloring.parse("0 1 0 1 2")
    assert nr_tuple(cycle(5), c5, 2) == (0, 1, 2)


def test_nr_tuple_length_mismatch():
    with pytest.raises(ValueError):
        nr_tuple(path(3), Coloring.singletons(4), 0)


def test_is_proper_examples():
    v = is_proper(complete(2), Coloring.from_classes(2, [{0, 1}]))
    assert not v and v.pair == (0, 1)
    for g in (complete(4), cycle(5), path(3)):
        assert is_proper(g, Coloring.singletons(g.n))
    assert is_proper(path(4), Coloring.from_classes(4, [{0, 2}, {1, 3}]))


def test_is_nl_p10_witness():
    c = Coloring.parse("0 1 2 1 2 3 1 2 0 1")
    assert is_nl(path(10), c)
    assert c.k == 4


def test_is_nl_c4_clash():
    v = is_nl(cycle(4), Coloring.from_classes(4, [{0, 2}, {1, 3}]))
    assert (v.accepted, v.reason, v.pair) == (False, "clash", (0, 2))
    assert v.describe() == "rejected: clash 0 2"


def test_is_nl_c5_accepted():
    assert is_nl(cycle(5), Coloring.from_classes(5, [{0, 2}, {1, 3}, {4}]))


def test_is_nl_reports_not_proper_first():
    v = is_nl(complete(2), Coloring.parse("0 0"))
    assert v.reason == "not-proper"


def test_is_ml_p10_three_classes():
    # the last vertex alone in its class gives every vertex a distinct distance to it
    assert is_ml(path(10), Coloring.parse("0 1 0 1 0 1 0 1 0 2"))


def test_is_ml_singletons():
    for g in (path(5), cycle(6), complete(3)):
        assert is_ml(g, Coloring.singletons(g.n))


def test_is_ml_bipartition_rejected():
    v = is_ml(path(10), Coloring.parse("0 1 0 1 0 1 0 1 0 1"))
    assert not v and v.reason == "clash"


def test_ml_needs_connected():
    with pytest.raises(DisconnectedGraphError):
        is_ml(K3_K1, Coloring.singletons(4))
    with pytest.raises(DisconnectedGraphError):
        distance_vector(K3_K1, Coloring.singletons(4), 0)


def test_distance_vector_path():
    assert distance_vector(path(4), Coloring.parse("0 1 0 2"), 0) == (0, 1, 3)


def test_dominating_examples():
    for g in (path(6), cycle(5), complete(4)):
        assert is_dominating(g, chi_nl_exact(g).witness)
    assert not is_dominating(K3_K1, Coloring.parse("0 1 2 0"))
    assert is_dominating(complete(2), Coloring.singletons(2))


def test_nr_tuples_have_one_zero():
    g = empty(3)
    for t in nr_tuples(g, Coloring.singletons(3)):
        assert t.count(0) == 1 and 1 not in t
