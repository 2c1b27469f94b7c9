import itertools

import pytest

from nlchroma.graph import (
    UNBOUNDED,
    Graph,
    Graph6HeaderError,
    Graph6TrailingError,
    Graph6TruncatedError,
    cartesian_product,
    clique_number,
    complement,
    complete,
    complete_multipartite,
    cycle,
    diameter,
    disjoint_union,
    empty,
    from_graph6,
    independence_number,
    induced_subgraph,
    join,
    make,
    metrics,
    mycielski,
    path,
    star,
    to_graph6,
)


def edge_set(g):
    return set(g.edges())


# graph6

def test_graph6_single_vertex():
    g = from_graph6("@")
    assert g.n == 1 and g.m == 0
    assert to_graph6(empty(1)) == "@"


def test_graph6_triangle():
    assert from_graph6("Bw") == complete(3)
    assert to_graph6(complete(3)) == "Bw"


def test_graph6_path3():
    assert edge_set(from_graph6("Bg")) == {(0, 1), (1, 2)}


def test_graph6_empty_order_zero():
    assert from_graph6("?").n == 0
    assert to_graph6(empty(0)) == "?"


def test_graph6_round_trip_all_small():
    for n in range(6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_mask(n, mask)
            assert from_graph6(to_graph6(g)) == g


def test_graph6_long_header():
    g = path(70)
    text = to_graph6(g)
    assert text.startswith("~")
    assert from_graph6(text) == g


def test_graph6_optional_prefix():
    assert from_graph6(">>graph6<<Bw") == complete(3)


@pytest.mark.parametrize("text,err", [
    ("", Graph6HeaderError),
    ("\x1f", Graph6HeaderError),
    ("~", Graph6HeaderError),
    ("C", Graph6TruncatedError),
    ("Bww", Graph6TrailingError),
])
def test_graph6_errors_are_distinct(text, err):
    with pytest.raises(err):
        from_graph6(text)


# construction

def test_asymmetric_rows_rejected():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


def test_loop_rejected():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])


def test_path10():
    g = make("path", [10])
    assert (g.n, g.m, diameter(g)) == (10, 9, 9)


def test_multipartite_1_4_is_star():
    g = make("complete_multipartite", [1, 4])
    assert g == star(4) and g.m == 4


def test_cycle4():
    g = make("cycle", [4])
    assert g.m == 4 and set(g.degrees()) == {2}


@pytest.mark.parametrize("kind,params", [("path", []), ("path", [0]), ("cycle", [2]), ("nope", [3]), ("empty", [-1])])
def test_make_rejects(kind, params):
    with pytest.raises(ValueError):
        make(kind, params)


# operators

def test_join_examples():
    assert join(complete(2), complete(2)) == complete(4)
    fan = join(empty(1), path(4))
    assert fan.n == 5 and fan.m == 3 + 4 and fan.degree(0) == 4
    assert join(empty(2), empty(3)) == complete_multipartite(2, 3)


def test_union_examples():
    assert disjoint_union(complete(1), complete(1)) == empty(2)
    two_p4 = disjoint_union(path(4), path(4))
    assert (two_p4.n, two_p4.m) == (8, 6)
    g = disjoint_union(complete(3), cycle(4))
    assert (g.n, g.m, len(g.components())) == (7, 7, 2)


def test_mycielski_examples():
    c5 = mycielski(complete(2))
    assert c5.n == 5 and c5.m == 5 and set(c5.degrees()) == {2} and c5.is_connected()
    grotzsch = mycielski(cycle(5))
    assert (grotzsch.n, grotzsch.m) == (11, 20)
    assert clique_number(grotzsch) == 2
    g = mycielski(empty(1))
    assert (g.n, g.m) == (3, 1) and edge_set(g) == {(1, 2)}


def test_cartesian_product_examples():
    sq = cartesian_product(path(2), path(2))
    assert sq.m == 4 and set(sq.degrees()) == {2} and sq.is_connected()
    assert cartesian_product(path(2), path(3)).m == 7
    g = cycle(5)
    assert cartesian_product(complete(1), g) == g


def test_complement_and_induced():
    for n in range(1, 6):
        assert complement(complete(n)) == empty(n)
    assert induced_subgraph(cycle(5), {0, 1, 2}) == path(3)
    assert complement(cycle(4)) == Graph.from_edges(4, [(0, 2), (1, 3)])


# metrics

def test_metrics_path10():
    m = metrics(path(10))
    assert (m.max_degree, m.min_degree, m.diameter, m.alpha, m.connected) == (2, 1, 9, 5, True)


def test_metrics_c4_twins():
    m = metrics(cycle(4))
    assert (0, 2, "false") in m.twin_pairs and (1, 3, "false") in m.twin_pairs


def test_metrics_disconnected():
    m = metrics(disjoint_union(complete(3), complete(1)))
    assert m.diameter is UNBOUNDED and not m.connected
    assert m.isolated == frozenset({3})


def test_true_twins_tagged():
    assert (0, 1, "true") in metrics(complete(2)).twin_pairs


def test_alpha_equals_omega_of_complement():
    for n in range(1, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = Graph.from_mask(n, mask)
            assert independence_number(g) == clique_number(complement(g))


def test_clique_number_bruteforce_agreement():
    g = mycielski(mycielski(complete(2)))
    best = max(r for r in range(1, 5) for s in itertools.combinations(range(g.n), r)
               if all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2)))
    assert clique_number(g) == best == 2
