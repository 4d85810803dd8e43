import pytest

from nacrig.colorings import has_nac, is_nac
from nacrig.exceptions import ContractError
from nacrig.graphs import Graph, load_fixture, parse_edge_list
from nacrig.structure import delta_classes, spanning_delta_check, \
    edge_bound_check, max_flexible_edges, find_independent_cut, \
    coloring_from_independent_cut, vertex_without_triangle, \
    coloring_from_triangle_free_vertex, find_connecting_edge_cut, \
    coloring_from_edge_cut, has_path_with_edges, analyze_structure

from .oracles import atlas_graphs, brute_force_delta_classes, \
    random_connected_graph, seeded

TWO_TRIANGLES_AND_BRIDGE = '0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n'


def test_prism_classes():
    classes = delta_classes(load_fixture('PRISM'))
    assert classes.classes == (((0, 1), (0, 2), (1, 2)), ((0, 3),),
                               ((1, 4),), ((2, 5),),
                               ((3, 4), (3, 5), (4, 5)))
    assert classes.connecting_edges == ((0, 3), (1, 4), (2, 5))
    assert not classes.is_delta_connected()
    assert classes.same_class((0, 1), (1, 2))
    assert not classes.same_class((0, 1), (0, 3))


def test_single_class_graphs():
    assert delta_classes(load_fixture('K4')).is_delta_connected()
    single_edge = delta_classes(Graph(2, [(0, 1)]))
    assert len(single_edge) == 1
    assert single_edge.is_delta_connected()
    assert single_edge.connecting_edges == ((0, 1),)


def test_classes_match_closure_oracle():
    for g in atlas_graphs(6):
        assert list(delta_classes(g).classes) == brute_force_delta_classes(g)


def test_spanning_class():
    assert spanning_delta_check(load_fixture('K4')) == 0
    assert spanning_delta_check(load_fixture('FIG2L')) is None
    assert spanning_delta_check(load_fixture('FIG8L')) is None
    assert spanning_delta_check(load_fixture('PRISM')) is None


@pytest.mark.parametrize('name, expected', [
    ('FIG2L', True),
    ('FIG2R', True),
    ('K4', False),
    ('PRISM', True),
])
def test_edge_bound(name, expected):
    assert edge_bound_check(load_fixture(name)) == expected


def test_edge_bound_values():
    assert max_flexible_edges(6) == 11
    k5 = Graph(5, [(u, v) for u in range(5) for v in range(u + 1, 5)])
    assert not edge_bound_check(k5)


def test_necessary_conditions_sweep():
    for g in atlas_graphs(6):
        if not g.is_connected() or g.n_edges == 0:
            continue
        if spanning_delta_check(g) is not None or not edge_bound_check(g):
            assert not has_nac(g), g


def test_bound_is_tight():
    for name in ('FIG2L', 'FIG2R'):
        g = load_fixture(name)
        assert g.n_edges == max_flexible_edges(6)
        assert has_nac(g)


def test_independent_cut_examples():
    assert find_independent_cut(load_fixture('K23')) == (0, 1)
    assert find_independent_cut(load_fixture('K4')) is None
    assert find_independent_cut(load_fixture('FIG9'), max_size=7) is None


def test_independent_cut_needs_connected_graph():
    with pytest.raises(ContractError):
        find_independent_cut(Graph(4, [(0, 1), (2, 3)]))


def test_coloring_from_independent_cut():
    g = load_fixture('K23')
    c = coloring_from_independent_cut(g, [0, 1])
    assert c.red_edges == ((0, 2), (1, 2))
    assert is_nac(g, c).ok


def test_coloring_from_star_center():
    g = load_fixture('STAR3')
    c = coloring_from_independent_cut(g, [0])
    assert c.red_edges == ((0, 1),)
    assert len(c.blue_edges) == 2


@pytest.mark.parametrize('cut', [[0, 4], [0, 1], [0, 9]])
def test_invalid_independent_cut(cut):
    with pytest.raises(ContractError):
        coloring_from_independent_cut(load_fixture('PRISM'), cut)


def test_vertex_without_triangle():
    assert vertex_without_triangle(load_fixture('FIG2L')) == 5
    assert vertex_without_triangle(load_fixture('K4')) is None
    assert vertex_without_triangle(load_fixture('C4')) == 0
    assert vertex_without_triangle(load_fixture('FIG9')) is None


@pytest.mark.parametrize('name', ['FIG2L', 'C4', 'K23', 'STAR3', 'K33'])
def test_coloring_from_triangle_free_vertex(name):
    g = load_fixture(name)
    c = coloring_from_triangle_free_vertex(g, vertex_without_triangle(g))
    assert is_nac(g, c).ok


def test_triangle_free_vertex_rejects_triangle():
    with pytest.raises(ContractError):
        coloring_from_triangle_free_vertex(load_fixture('FIG2L'), 0)


def test_connecting_edge_cut_examples():
    assert find_connecting_edge_cut(load_fixture('PRISM')) == \
        ((0, 3), (1, 4), (2, 5))
    assert find_connecting_edge_cut(load_fixture('K4')) is None
    assert find_connecting_edge_cut(load_fixture('FIG9')) is None


def test_coloring_from_edge_cut():
    g = load_fixture('PRISM')
    c = coloring_from_edge_cut(g, [(0, 3), (1, 4), (2, 5)])
    assert c.red_edges == ((0, 3), (1, 4), (2, 5))
    assert is_nac(g, c).ok

    bridged = parse_edge_list(TWO_TRIANGLES_AND_BRIDGE)
    assert find_connecting_edge_cut(bridged) == ((2, 3),)
    c = coloring_from_edge_cut(bridged, [(2, 3)])
    assert c.red_edges == ((2, 3),)


@pytest.mark.parametrize('cut', [[(0, 3)], [(0, 1), (3, 4)], [(0, 4)]])
def test_invalid_edge_cut(cut):
    with pytest.raises(ContractError):
        coloring_from_edge_cut(load_fixture('PRISM'), cut)


def test_edge_cut_is_minimized():
    # Both edges are connecting, either one alone already separates.
    g = parse_edge_list('0 1\n1 2\n2 3\n3 4\n2 4\n')
    c = coloring_from_edge_cut(g, [(0, 1), (1, 2)])
    assert len(c.red_edges) == 1
    assert is_nac(g, c).ok


def test_path_with_four_edges():
    path = [(0, 1), (1, 2), (2, 3), (3, 4)]
    assert has_path_with_edges(path)
    assert not has_path_with_edges(path[:3])
    assert not has_path_with_edges([(0, 1), (0, 2), (0, 3), (0, 4)])
    assert has_path_with_edges([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])


def witness_colorings(g):
    return analyze_structure(g).witness_colorings()


@pytest.mark.parametrize('name', ['C4', 'K23', 'K33', 'PRISM', 'FIG2L',
                                  'FIG2R', 'FIG9', 'FIG12', 'STAR3',
                                  'ROTGRAPH'])
def test_witnesses_are_nac_on_fixtures(name):
    g = load_fixture(name)
    for _, c in witness_colorings(g):
        assert is_nac(g, c).ok


def test_witnesses_are_nac_on_random_graphs():
    rnd = seeded(8)
    for _ in range(1000):
        n = rnd.randint(3, 8)
        g = random_connected_graph(rnd, n, rnd.randint(0, n + 3))
        for name, c in witness_colorings(g):
            assert is_nac(g, c).ok, (name, g)


def test_structure_report_json():
    report = analyze_structure(load_fixture('PRISM'))
    data = report.to_json()
    assert data['spannedBy'] is None
    assert data['edgeBoundOk'] is True
    assert data['connectingEdgeCut'] == [[0, 3], [1, 4], [2, 5]]
    assert data['independentCutMaxSize'] == 4
    assert len(data['deltaClasses']) == 5
    assert not report.excludes_nac
    assert analyze_structure(load_fixture('K4')).excludes_nac
