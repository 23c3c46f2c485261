import random

import pytest

from support import all_chain_graphs, canonical_shape_ok
from twotrans.bounds import complete_bipartite_tr2
from twotrans.chain import BicliqueParams, max_biclique_params, three_case_value, tr2_chain
from twotrans.errors import DomainError
from twotrans.graph import (
    complete_bipartite_graph,
    generate_near_complete_bipartite,
    path_graph,
    random_chain,
)
from twotrans.oracle import brute_tr, brute_tr2, canonicalize_partition, verify_2transitive
from twotrans.recognize import ChainOrdering, chain_ordering


def params(g):
    return max_biclique_params(g, chain_ordering(g))


def test_biclique_examples():
    assert params(complete_bipartite_graph(3, 3)) == BicliqueParams(3, "full", (False, False))
    assert params(path_graph(4)).t == 2 and params(path_graph(4)).kind == "minus_e"
    star = params(complete_bipartite_graph(1, 4))
    assert star.t == 1 and star.kind == "full" and sum(star.ext) == 1


def test_biclique_rejects_bad_ordering():
    g = path_graph(4)
    with pytest.raises(DomainError):
        max_biclique_params(g, ChainOrdering((0, 2), (1, 3)))


@pytest.mark.parametrize(
    "g, k",
    [(complete_bipartite_graph(3, 3), 2), (path_graph(2), 1), (generate_near_complete_bipartite(4), 3)],
)
def test_examples(g, k):
    got, p = tr2_chain(g, chain_ordering(g))
    assert got == k and verify_2transitive(g, p)


def test_near_complete_family():
    for t in range(2, 9):
        g = generate_near_complete_bipartite(t)
        assert tr2_chain(g, chain_ordering(g))[0] == t // 2 + 1


def test_exhaustive_against_oracle():
    count = 0
    for g in all_chain_graphs(9):
        o = chain_ordering(g)
        k, p = tr2_chain(g, o)
        assert k == brute_tr2(g)[0]
        assert p.k == k and verify_2transitive(g, p)
        if k >= 3:
            assert canonical_shape_ok(canonicalize_partition(g, p))
        count += 1
    assert count == 255


@pytest.mark.parametrize("seed", range(100))
def test_random_against_oracle(seed):
    g = random_chain(seed, random.Random(seed).randint(2, 12))
    k, _ = tr2_chain(g, chain_ordering(g))
    assert k == brute_tr2(g)[0]


def test_transitivity_is_t_plus_one():
    for g in all_chain_graphs(7):
        assert params(g).transitivity == brute_tr(g)[0]


def test_three_case_expression_undercounts():
    g = generate_near_complete_bipartite(4)
    p = params(g)
    assert (p.t, p.kind, sum(p.ext)) == (2, "full", 1)
    assert three_case_value(p) == 2 < tr2_chain(g, chain_ordering(g))[0] == 3


def test_complete_bipartite_values():
    for a in range(1, 7):
        for b in range(1, 7):
            g = complete_bipartite_graph(a, b)
            assert tr2_chain(g, chain_ordering(g))[0] == complete_bipartite_tr2(a, b)


def test_rejects_non_chain():
    g = path_graph(5)  # contains an induced 2K2
    with pytest.raises(DomainError):
        tr2_chain(g, ChainOrdering((0, 2, 4), (1, 3)))
