import pytest

from nlchroma.coloring import is_nl
from nlchroma.graph import (
    Graph,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    path,
    star,
)
from nlchroma.solver import (
    Budget,
    SizeGuardError,
    chi_exact,
    chi_l_exact,
    chi_nl_bruteforce,
    chi_nl_exact,
    counting_capacity,
    counting_lower_bound,
    greedy_upper,
    lambda_exact,
    lower_bound,
)


@pytest.mark.parametrize("n,delta,iso,want", [(10, 2, False, 4), (9, 4, False, 3), (1, 0, True, 1)])
def test_counting_lower_bound(n, delta, iso, want):
    assert counting_lower_bound(n, delta, iso) == want


def test_counting_capacity_sums():
    # 3 * (C(2,1) + C(2,2)) = 9 and 4 * (C(3,1) + C(3,2)) = 24
    assert counting_capacity(3, 2, False) == 9
    assert counting_capacity(4, 2, False) == 24
    assert counting_capacity(3, 5, True) == 3 * 4


def test_greedy_upper_examples():
    k, c = greedy_upper(complete(5))
    assert k == 5 and all(len(cls) == 1 for cls in c.classes)
    k, c = greedy_upper(path(10))
    assert 4 <= k <= 10 and is_nl(path(10), c)
    assert greedy_upper(empty(3))[0] == 3


@pytest.mark.parametrize("g,want", [
    (path(10), 4),
    (cycle(4), 4),
    (path(4), 3),
    (complete_multipartite(1, 4), 5),
    (cycle(5), 3),
    (empty(0), 0),
    (empty(1), 1),
])
def test_chi_nl_exact_values(g, want):
    r = chi_nl_exact(g)
    assert r.chi_nl == want and r.status == "exact"
    if g.n:
        assert is_nl(g, r.witness) and r.witness.k == want


@pytest.mark.parametrize("g", [path(10), cycle(4), path(4), star(4), cycle(7)])
def test_search_only_matches_fastpath(g):
    assert chi_nl_exact(g, use_fastpath=False).chi_nl == chi_nl_exact(g).chi_nl


def test_certificate_exhausted_below():
    r = chi_nl_exact(cycle(6), use_fastpath=False)
    assert r.certificate.kind in ("exhausted", "bound")
    if r.certificate.kind == "exhausted":
        assert r.certificate.detail == str(r.chi_nl - 1)


def test_bruteforce_examples():
    assert chi_nl_bruteforce(path(3)) == 3
    assert chi_nl_bruteforce(cycle(5)) == 3
    two_p4 = disjoint_union(path(4), path(4))
    assert chi_nl_bruteforce(two_p4) == chi_nl_exact(two_p4).chi_nl == 3


def test_bruteforce_size_guard():
    with pytest.raises(SizeGuardError):
        chi_nl_bruteforce(path(11))


def test_parameter_oracles():
    assert chi_exact(path(10)) == 2
    assert chi_l_exact(path(10)) == 3
    for n in range(2, 6):
        assert chi_exact(complete(n)) == n
        assert lambda_exact(complete(n)) == n - 1
    assert lambda_exact(cycle(4)) == 2


def test_lower_bound_never_exceeds_value():
    for n in range(1, 6):
        for mask in range(0, 1 << (n * (n - 1) // 2), 7):
            g = Graph.from_mask(n, mask)
            assert lower_bound(g)[0] <= chi_nl_bruteforce(g)


def test_budget_exhaustion_is_indeterminate():
    from nlchroma.families import generate_gk

    g = disjoint_union(generate_gk(4)[0], path(7))
    r = chi_nl_exact(g, Budget(max_nodes=1), use_fastpath=False)
    if r.indeterminate:
        assert r.chi_nl is None and r.lower <= r.upper
        assert is_nl(g, r.witness) and r.witness.k == r.upper
    r2 = chi_nl_exact(path(12), Budget(max_nodes=1), use_fastpath=False)
    assert r2.indeterminate or r2.chi_nl == 4


def test_result_record_fields():
    rec = chi_nl_exact(cycle(5)).to_record(cycle(5))
    assert set(rec) == {"graph6", "status", "chi_nl", "witness", "certificate", "rule", "nodes", "lower", "upper"}
    assert rec["chi_nl"] == 3 and rec["status"] == "exact"
