"""Worked examples for each public operation."""

import random
from fractions import Fraction

import pytest

from hypertrans import (Hypergraph, InputError, Matching, Multigraph, Tag, are_isomorphic, chromatic_index_exact,
                        claim_d_bound, classify, cm_bound, components, contains_shannon_submultigraph, degree,
                        delete_vertices, edge_color_shannon, gen_E, gen_T, is_k_uniform, is_transversal,
                        make_shannon, matching_bound_check, max_matching, meets_bound_with_equality,
                        observation3_check, tau_exact, tau_set_containing, to_conflict_multigraph,
                        transversal_from_matching, transversal_number)
from hypertrans.core import relabel
from oracles import random_hypergraph_edges

C5 = Multigraph(5, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (0, 4): 1})
P4 = Multigraph(4, {(0, 1): 1, (1, 2): 1, (2, 3): 1})


def graph(n, pairs):
    return Hypergraph(n, tuple(pairs))


# -- core -------------------------------------------------------------------

def test_degree_examples():
    assert all(degree(gen_E(4), v) == 1 for v in range(4))
    T5 = gen_T(5)
    assert degree(T5, 0) == 2  # a vertex of A
    assert degree(T5, 7) == 1  # the vertex of D


def test_uniformity_examples():
    assert is_k_uniform(gen_E(4), 4) and not is_k_uniform(gen_E(4), 3)
    assert is_k_uniform(gen_T(5), 5)


def test_component_examples():
    assert [len(c) for c in components(gen_E(6))] == [6]
    two = Hypergraph(8, ((0, 1, 2, 3), (4, 5, 6, 7)))
    assert [len(c) for c in components(two)] == [4, 4]
    assert [len(c) for c in components(gen_T(4))] == [6]


def test_components_are_closed_under_edges():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 9)
        H = Hypergraph(n, tuple(random_hypergraph_edges(rng, n, rng.randint(0, 5), rng.randint(1, min(3, n)))))
        cells = components(H)
        where = {v: i for i, c in enumerate(cells) for v in c}
        assert sorted(where) == list(range(n))
        assert all(len({where[v] for v in e}) == 1 for e in H.edges)


def test_deletion_examples():
    H, _ = delete_vertices(gen_E(5), [2])
    assert (H.n, H.m) == (0, 0)
    H, index = delete_vertices(gen_T(4), [0])
    assert (H.n, H.m) == (4, 1) and sorted(index) == [2, 3, 4, 5]
    iso = Hypergraph(5, ((0, 1), (1, 3)))
    H, _ = delete_vertices(iso, [])
    assert H == Hypergraph(3, ((0, 1), (1, 2)))


def test_isomorphism_examples():
    assert are_isomorphic(gen_E(4), relabel(gen_E(4), [3, 1, 0, 2]))
    assert not are_isomorphic(gen_E(4), gen_E(5))
    assert are_isomorphic(gen_T(4), Hypergraph(6, ((0, 1, 2, 3), (0, 1, 4, 5), (2, 3, 4, 5))))


def test_isomorphism_is_an_equivalence_on_samples():
    rng = random.Random(1)
    pool = [Hypergraph(5, tuple(random_hypergraph_edges(rng, 5, 3, 2))) for _ in range(25)]
    for a in pool:
        assert are_isomorphic(a, a)
        for b in pool:
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
            if are_isomorphic(a, b):
                assert all(are_isomorphic(a, c) == are_isomorphic(b, c) for c in pool)


def test_handshake():
    for k in (2, 4, 5, 9):
        T = gen_T(k)
        assert sum(T.degrees) == k * T.m


# -- transversal --------------------------------------------------------------

def test_transversal_examples():
    assert all(is_transversal(gen_E(4), [v]) for v in range(4))
    assert not is_transversal(gen_T(4), [0])
    H = gen_T(6)
    assert is_transversal(H, range(H.n))
    assert tau_exact(gen_E(7))[0] == 1 and tau_exact(gen_T(7))[0] == 2
    assert tau_exact(Hypergraph(0, ()))[0] == 0
    c5 = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert tau_exact(c5)[0] == 3


def test_bound_examples():
    assert cm_bound(gen_E(4), 4) == 1
    assert cm_bound(gen_T(5), 5) == 2
    c5 = graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert cm_bound(c5, 2) == Fraction(10, 3)
    for k in range(2, 13):
        assert meets_bound_with_equality(gen_E(k), k) and meets_bound_with_equality(gen_T(k), k)
    assert not meets_bound_with_equality(graph(3, [(0, 1), (1, 2)]), 2)


def test_forced_set_examples():
    assert tau_set_containing(gen_E(5), [3]).vertices == (3,)
    T = tau_set_containing(gen_T(4), [1])
    assert T is not None and 1 in T.vertices and len(T) == 2
    assert tau_set_containing(gen_T(4), [0, 1]) is None


def test_deleting_a_vertex_lowers_tau_by_at_most_one():
    rng = random.Random(2)
    for _ in range(100):
        n = rng.randint(2, 9)
        H = Hypergraph(n, tuple(random_hypergraph_edges(rng, n, rng.randint(1, 7), rng.randint(1, min(3, n)))))
        t = transversal_number(H)
        for x in range(n):
            assert transversal_number(delete_vertices(H, [x])[0]) >= t - 1


# -- multigraph -----------------------------------------------------------------

def test_matching_examples():
    assert len(max_matching(make_shannon(7))) == 1
    assert len(max_matching(Multigraph(3, {}))) == 0
    assert len(max_matching(P4)) == 2


def test_make_shannon_examples():
    assert sorted(make_shannon(4).multiplicity.values()) == [2, 2, 2] and make_shannon(4).size == 6
    assert sorted(make_shannon(5).multiplicity.values()) == [2, 2, 3] and make_shannon(5).size == 7
    assert sorted(make_shannon(2).multiplicity.values()) == [1, 1, 1]
    for d in range(2, 13):
        degs = sorted(make_shannon(d).degrees)
        assert degs == sorted([d, d, 2 * (d // 2)])


def test_shannon_containment_examples():
    assert contains_shannon_submultigraph(make_shannon(5), 5) == (0, 1, 2)
    assert contains_shannon_submultigraph(C5, 2) is None
    # pendant edge at the vertex of degree 4
    S = make_shannon(5)
    low = S.degrees.index(4)
    pendant = dict(S.multiplicity)
    pendant[(low, 3)] = 1
    assert contains_shannon_submultigraph(Multigraph(4, pendant), 5) == (0, 1, 2)


def test_chromatic_index_examples():
    assert chromatic_index_exact(make_shannon(4))[0] == 6
    assert chromatic_index_exact(C5)[0] == 3
    assert chromatic_index_exact(Multigraph(2, {(0, 1): 1}))[0] == 1


def test_shannon_colouring_examples():
    for d in range(2, 9):
        assert edge_color_shannon(make_shannon(d)).used_colors() == 3 * d // 2
    assert edge_color_shannon(P4).used_colors() == 2
    assert edge_color_shannon(C5).used_colors() == 3


def test_colour_classes_are_matchings():
    rng = random.Random(3)
    for _ in range(60):
        G = Multigraph(5, {(u, v): rng.randint(1, 3) for u in range(5) for v in range(u + 1, 5) if rng.random() < 0.6})
        if not G.size:
            continue
        col = edge_color_shannon(G)
        for cls in col.color_classes():
            Matching(G, tuple(cls))


def test_matching_bound_examples():
    v = matching_bound_check(make_shannon(5), 5)
    assert v.equality and v.is_shannon
    v = matching_bound_check(Multigraph(2, {(0, 1): 1}), 4)
    assert v.bound_holds and not v.equality
    v = matching_bound_check(P4, 4)
    assert (v.alpha, v.size) == (2, 3) and not v.equality and not v.is_shannon


# -- reduction ----------------------------------------------------------------

def test_reduction_examples():
    C = to_conflict_multigraph(gen_E(4), 4)
    assert C.graph.num_vertices == 1 and C.graph.size == 0
    H = Hypergraph(6, ((0, 1, 2, 3), (2, 3, 4, 5)))
    C = to_conflict_multigraph(H, 4)
    assert C.graph == Multigraph(2, {(0, 1): 2}) and C.graph.size == 4 * 2 - 6
    T = transversal_from_matching(H, C, max_matching(C.graph))
    assert len(T) == 1 == transversal_number(H)
    E = gen_E(3)
    CE = to_conflict_multigraph(E, 3)
    assert len(transversal_from_matching(E, CE, Matching(CE.graph, ()))) == 1


def test_reduction_transfers_degree_and_connectivity():
    for k in range(2, 10):
        C = to_conflict_multigraph(gen_T(k), k)
        assert C.graph.max_degree <= k and C.graph.is_connected()


def test_chain_examples():
    rep = claim_d_bound(gen_E(5), 5)
    assert rep.tau == 1 == rep.via_matching and rep.second_tight and rep.identity and rep.all_tight
    rep = claim_d_bound(graph(3, [(0, 1), (1, 2)]), 2)
    assert rep.tau == 1 and rep.bound == Fraction(5, 3) and rep.holds and not rep.all_tight


# -- extremal -----------------------------------------------------------------

def test_classify_examples():
    assert classify(gen_E(5), 5).tag is Tag.IS_EK
    assert classify(gen_T(4), 4).tag is Tag.IS_TK
    cls = classify(graph(4, [(0, 1), (1, 2), (2, 3)]), 2)
    assert cls.tag is Tag.STRICTLY_BELOW_BOUND and cls.gap == Fraction(1, 3)
    for k in [2] + list(range(4, 13)):
        assert classify(gen_E(k), k).tag is Tag.IS_EK and classify(gen_T(k), k).tag is Tag.IS_TK


def test_classify_is_constant_on_isomorphism_classes():
    rng = random.Random(4)
    for k in (2, 4, 5):
        for H in (gen_E(k), gen_T(k), Hypergraph(2 * k - 1, ((tuple(range(k))), tuple(range(k - 1, 2 * k - 1))))):
            base = classify(H, k).tag
            for _ in range(5):
                perm = list(range(H.n))
                rng.shuffle(perm)
                assert classify(relabel(H, perm), k).tag is base


def test_generator_examples():
    assert (gen_T(4).n, gen_T(4).m) == (6, 3)
    assert (gen_T(5).n, gen_T(5).m) == (8, 3)
    assert gen_T(2) == graph(3, [(0, 1), (0, 2), (1, 2)])
    assert gen_E(2) == graph(2, [(0, 1)])
    for k in range(2, 13):
        assert gen_T(k).n == (3 * k + k % 2) // 2


@pytest.mark.parametrize("k", [2, 4, 5])
def test_family_report_examples(k):
    assert observation3_check(k).passed


def test_generators_reject_small_k():
    with pytest.raises(InputError):
        gen_E(1)
    with pytest.raises(InputError):
        gen_T(1)
