from itertools import permutations

import pytest

from nacrig.exceptions import CapacityError
from nacrig.graphs import Graph, canonical_form, canonical_labeling, \
    canonical_graph, load_fixture, parse_edge_list

from .oracles import atlas_graphs, brute_force_isomorphic, permuted, \
    random_connected_graph, random_permutation, seeded


def test_four_cycle_permutations():
    c4 = load_fixture('C4')
    codes = {canonical_form(permuted(c4, p)) for p in permutations(range(4))}
    assert len(codes) == 1


def test_four_cycle_and_path_differ():
    c4 = load_fixture('C4')
    p4 = parse_edge_list('0 1\n1 2\n2 3')
    assert canonical_form(c4) != canonical_form(p4)


def test_fig8_graphs_not_isomorphic():
    left, right = load_fixture('FIG8L'), load_fixture('FIG8R')
    assert canonical_form(left) != canonical_form(right)
    assert not brute_force_isomorphic(left, right)


def test_labeling_order_gives_canonical_graph():
    g = load_fixture('FIG9')
    code, order = canonical_labeling(g)
    assert sorted(order) == list(g.vertices)
    assert code.to_graph() == g.relabel(order)
    assert canonical_graph(g) == code.to_graph()


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6])
def test_invariance_all_permutations(n):
    for g in atlas_graphs(n, min_n=n):
        code = canonical_form(g)
        for perm in permutations(range(n)):
            assert canonical_form(permuted(g, perm)) == code


@pytest.mark.parametrize('n', [1, 2, 3, 4, 5, 6, 7])
def test_distinct_classes_distinct_codes(n):
    graphs = list(atlas_graphs(n, min_n=n))
    assert len({canonical_form(g) for g in graphs}) == len(graphs)


@pytest.mark.parametrize('n', [7, 8, 9, 10])
def test_invariance_random_graphs(n):
    rnd = seeded(n)
    for extra in range(0, 2 * n, 3):
        g = random_connected_graph(rnd, n, extra)
        code = canonical_form(g)
        for _ in range(100):
            perm = random_permutation(rnd, n)
            assert canonical_form(permuted(g, perm)) == code


def test_vertex_cap():
    with pytest.raises(CapacityError):
        canonical_form(Graph(11, [(0, 1)]))
    assert canonical_form(Graph(11, [(0, 1)]), max_vertices=11).text
