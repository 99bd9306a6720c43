import random

import networkx as nx
import pytest

from hypertrans import (ContractViolation, InputError, Matching, Multigraph, ParseError,
                        chromatic_index_exact, contains_shannon_submultigraph, edge_color_shannon,
                        format_multigraph, is_shannon_multigraph, make_shannon, matching_bound_check,
                        matching_number, max_matching, parse_multigraph)
from hypertrans.multigraph import EdgeColoring, multigraphs_isomorphic, shannon_bound
from oracles import chromatic_index_brute, matching_brute, random_multigraph_pairs


def _random(rng, n_max=6, mult=4, density=0.6):
    n = rng.randint(1, n_max)
    return Multigraph(n, random_multigraph_pairs(rng, n, mult, density))


def test_normalizes_pairs_and_rejects_loops():
    G = Multigraph(3, {(2, 0): 2, (0, 1): 1})
    assert G.pairs == ((0, 1, 1), (0, 2, 2))
    assert G.mu(2, 0) == 2 and G.mu(1, 2) == 0
    assert G.size == 3 and G.degrees == (3, 1, 2)
    with pytest.raises(InputError):
        Multigraph(2, {(1, 1): 1})
    with pytest.raises(InputError):
        Multigraph.from_edges(2, [(0, 2)])


def test_equality_ignores_mapping_order_and_zero_entries():
    assert Multigraph(3, {(0, 1): 1, (1, 2): 2}) == Multigraph.from_edges(3, [(2, 1), (0, 1), (1, 2)])
    assert hash(Multigraph(2, {(0, 1): 2})) == hash(Multigraph.from_edges(2, [(0, 1), (1, 0)]))


def test_hypergraph_conversion_round_trip():
    G = Multigraph(4, {(0, 1): 2, (2, 3): 1})
    H = G.to_hypergraph()
    assert H.edges == ((0, 1), (0, 1), (2, 3))
    assert Multigraph.from_hypergraph(H) == G
    assert not G.is_connected()


def test_max_matching_matches_networkx_and_brute_force():
    rng = random.Random(4)
    for _ in range(300):
        G = _random(rng, 9, 3, rng.random())
        M = max_matching(G)
        assert isinstance(M, Matching)
        g = nx.Graph()
        g.add_nodes_from(range(G.num_vertices))
        g.add_edges_from((u, v) for u, v, _ in G.pairs)
        assert len(M) == len(nx.max_weight_matching(g, maxcardinality=True))
        if G.size <= 12:
            assert len(M) == matching_brute(G.edge_instances())
        assert matching_number(G) == len(M)


def test_matching_validation():
    G = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(ContractViolation):
        Matching(G, ((0, 1), (1, 2)))
    with pytest.raises(ContractViolation):
        Matching(G, ((0, 2),))


def test_chromatic_index_matches_brute_force():
    rng = random.Random(8)
    seen = 0
    while seen < 150:
        G = _random(rng, 5, 3)
        if not 1 <= G.size <= 8:
            continue
        seen += 1
        chi, col = chromatic_index_exact(G)
        assert chi == chromatic_index_brute(G.edge_instances())
        assert col.is_proper() and col.used_colors() == chi


def test_chromatic_index_requires_edges():
    with pytest.raises(InputError):
        chromatic_index_exact(Multigraph(2, {}))


def test_shannon_colouring_is_proper_within_bound():
    rng = random.Random(9)
    for _ in range(400):
        G = _random(rng, 7, 5)
        if G.size == 0:
            continue
        col = edge_color_shannon(G)
        assert col.is_proper()
        assert col.used_colors() <= shannon_bound(G.max_degree)
        assert sum(len(c) for c in col.colors.values()) == G.size


def test_improper_colouring_is_rejected():
    G = Multigraph(3, {(0, 1): 1, (1, 2): 1})
    with pytest.raises(ContractViolation):
        EdgeColoring(G, {(0, 1): (0,), (1, 2): (0,)}, 1)
    with pytest.raises(ContractViolation):
        EdgeColoring(G, {(0, 1): (0,)}, 2)
    assert EdgeColoring(G, {(0, 1): (0,), (1, 2): (1,)}, 2).color_classes() == [[(0, 1)], [(1, 2)]]


@pytest.mark.parametrize("d", range(2, 13))
def test_shannon_multigraph_family(d):
    S = make_shannon(d)
    assert S.num_vertices == 3 and S.max_degree == d and S.size == shannon_bound(d)
    assert is_shannon_multigraph(S, d)
    assert contains_shannon_submultigraph(S, d) is not None
    if d <= 6:
        assert chromatic_index_exact(S)[0] == shannon_bound(d)


def test_shannon_submultigraph_inside_larger_host():
    G = Multigraph(5, {(1, 2): 2, (1, 4): 2, (2, 4): 2, (0, 3): 1})
    assert contains_shannon_submultigraph(G, 4) == (1, 2, 4)
    assert not is_shannon_multigraph(G, 4)
    assert contains_shannon_submultigraph(Multigraph(5, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (0, 4): 1}), 2) is None


def test_matching_bound_verdict():
    v = matching_bound_check(make_shannon(4), 4)
    assert (v.alpha, v.size, v.denominator) == (1, 6, 6)
    assert v.bound_holds and v.equality and v.is_shannon and v.consistent
    v = matching_bound_check(Multigraph(4, {(0, 1): 2, (1, 2): 2, (2, 3): 2}), 4)
    assert v.bound_holds and not v.equality and not v.is_shannon


def test_make_shannon_needs_degree_two():
    with pytest.raises(InputError):
        make_shannon(1)


def test_matching_bound_preconditions():
    with pytest.raises(ContractViolation):
        matching_bound_check(make_shannon(3), 3)
    with pytest.raises(ContractViolation):
        matching_bound_check(Multigraph(4, {(0, 1): 1, (2, 3): 1}), 4)
    with pytest.raises(ContractViolation):
        matching_bound_check(make_shannon(6), 4)


def test_isomorphism_of_multigraphs():
    assert multigraphs_isomorphic(make_shannon(5), Multigraph(3, {(0, 1): 3, (1, 2): 2, (0, 2): 2}))
    assert not multigraphs_isomorphic(make_shannon(5), make_shannon(4))


def test_text_format():
    G = parse_multigraph("# shannon\n3 3\n0 1 2\n0 2 2\n1 2 3\n")
    assert G == make_shannon(5)
    assert format_multigraph(G) == "3 3\n0 1 2\n0 2 2\n1 2 3\n"
    assert parse_multigraph(format_multigraph(G)) == G


@pytest.mark.parametrize("text, line, col", [
    ("3\n", 1, 1),
    ("3 1\n0 1\n", 2, 3),
    ("3 1\n1 0 1\n", 2, 3),
    ("3 1\n0 1 0\n", 2, 5),
    ("3 1\n0 3 1\n", 2, 3),
    ("3 2\n0 1 1\n0 1 2\n", 3, 1),
    ("3 2\n0 1 1\n", 3, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_multigraph(text)
    assert (info.value.line, info.value.column) == (line, col)
