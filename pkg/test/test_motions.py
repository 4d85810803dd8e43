import math

import numpy as np
import pytest

from nacrig.colorings import EdgeColoring, NacColoring, enumerate_nac
from nacrig.exceptions import ClassificationError, ContractError
from nacrig.graphs import Graph, load_fixture
from nacrig.motions import Frame, Labeling, Motion, ZigzagData, \
    component_grid, default_alphas, detect_flex, flex3d, grid_motion, \
    injective_flex, pin_frame, realization_is_compatible, recover_coloring, \
    zigzag_motion, svg_frames, animated_svg, write_svg_frames

SQ3 = math.sqrt(3)

# Edge labels of the rotating triangles graph, red triangles first.
ROT_RED = [('1', '4'), ('4', '5'), ('5', '1'), ('3', '6'), ('6', '7'),
           ('7', '3'), ('2', '8'), ('8', '9'), ('9', '2')]

# Blue classes are ordered by smallest vertex: {1,2,3}, {4,9}, {5,6},
# {7,8}; the vectors of the last two follow that order.
ROT_A = [(0, 0), (-3 * SQ3 / 8, -3 / 8), (3 * SQ3 / 8, -3 / 8), (0, 3 / 4)]
ROT_B = [(0, 0), (-1 / 2, SQ3 / 2), (1 / 2, SQ3 / 2)]

ROT_FIRST_FRAME = [(0., 0.), (-0.5, 0.866025), (0.5, 0.866025),
                   (-0.649519, -0.375), (0.649519, -0.375),
                   (1.14952, 0.491025), (0.5, 1.61603), (-0.5, 1.61603),
                   (-1.14952, 0.491025)]
ROT_MIDDLE_FRAME = [(0., 0.), (-0.5, 0.866025), (0.5, 0.866025),
                    (-0.75, 0.), (0.375, -0.649519), (0.875, 0.216506),
                    (0.875, 1.51554), (-0.125, 1.51554), (-1.25, 0.866025)]
ROT_LAST_FRAME = [(0., 0.), (-0.5, 0.866025), (0.5, 0.866025),
                  (-0.375, 0.649519), (-0.375, -0.649519),
                  (0.125, 0.216506), (1.25, 0.866025), (0.25, 0.866025),
                  (-0.875, 1.51554)]

MOTION_FIXTURES = ['C4', 'PRISM', 'K23', 'FIG9', 'FIG12']


def c4_delta_two():
    g = load_fixture('C4')
    return NacColoring.from_red_edges(g, [(2, 3), (0, 3)])


def prism_coloring():
    g = load_fixture('PRISM')
    return NacColoring.from_red_edges(g, [(0, 3), (1, 4), (2, 5)])


def rotating_triangles():
    g = load_fixture('ROTGRAPH')
    red = [(g.index_of(u), g.index_of(v)) for u, v in ROT_RED]
    return NacColoring.from_red_edges(g, red)


def rotating_motion(alphas):
    ga = component_grid(rotating_triangles().graph, rotating_triangles())
    return zigzag_motion(ga, ZigzagData(ROT_A, ROT_B), alphas)


def test_c4_component_grid():
    c = c4_delta_two()
    ga = component_grid(c.graph, c)
    assert ga.red_components.blocks == ((0, 2, 3), (1,))
    assert ga.blue_components.blocks == ((0, 1, 2), (3,))
    assert ga.cells == ((1, 1), (2, 1), (1, 1), (1, 2))
    assert not injective_flex(ga)


def test_prism_component_grid():
    c = prism_coloring()
    ga = component_grid(c.graph, c)
    assert ga.red_components.blocks == ((0, 3), (1, 4), (2, 5))
    assert ga.blue_components.blocks == ((0, 1, 2), (3, 4, 5))
    assert injective_flex(ga)


def test_component_grid_rejects_invalid_coloring():
    g = load_fixture('C4')
    with pytest.raises(ContractError):
        component_grid(g, EdgeColoring.from_red_edges(g, [(0, 1)]))
    with pytest.raises(ContractError):
        component_grid(load_fixture('K4'), c4_delta_two())


def test_c4_grid_motion():
    c = c4_delta_two()
    motion = grid_motion(component_grid(c.graph, c))
    assert len(motion.frames) == 36
    assert np.allclose(motion.labeling.lengths, 1.)
    assert motion.max_length_error() < 1e-9
    positions = motion.positions()
    assert np.allclose(positions[:, 0], positions[:, 2])
    assert motion.varying_pair() == (1, 3)
    assert motion.validate()


def test_grid_labeling_is_right_angle_frame():
    c = prism_coloring()
    motion = grid_motion(component_grid(c.graph, c), [0., math.pi / 2])
    # The blue triangles are flattened onto a line.
    assert [motion.labeling.length(*e) for e in c.red_edges] == [1., 1., 1.]
    assert motion.labeling.length(0, 1) == 1.
    assert motion.labeling.length(0, 2) == 2.
    assert realization_is_compatible(c.graph, motion.labeling,
                                     motion.frames[1].positions)


@pytest.mark.parametrize('name', MOTION_FIXTURES)
def test_motions_from_every_coloring(name):
    g = load_fixture(name)
    for c in enumerate_nac(g):
        ga = component_grid(g, c)
        for motion in (grid_motion(ga), zigzag_motion(ga)):
            assert motion.max_length_error() < 1e-9
            assert motion.varying_pair() is not None
            assert recover_coloring(motion) == c


def test_rotating_triangles_frames():
    motion = rotating_motion([0., math.pi / 6, math.pi / 2])
    for frame, expected in zip(motion.frames,
                               (ROT_FIRST_FRAME, ROT_MIDDLE_FRAME,
                                ROT_LAST_FRAME)):
        assert np.allclose(frame.positions, expected, atol=1e-5)


def test_rotating_triangles_pinned():
    motion = rotating_motion([0., math.pi / 2])
    pinned = motion.pinned((0, 1))
    assert np.allclose(pinned[1], pin_frame(ROT_LAST_FRAME, (0, 1)),
                       atol=1e-5)
    assert np.allclose(pinned[1][0], 0.)
    assert pinned[1][1][1] == pytest.approx(0., abs=1e-12)
    exact = np.array(ROT_A)[[0, 0, 0, 1, 2, 2, 3, 3, 1]]
    exact = exact @ np.array([[0., 1.], [-1., 0.]]).T
    exact += np.array(ROT_B)[[0, 1, 2, 0, 0, 2, 2, 1, 1]]
    assert np.allclose(motion.frames[1].positions, exact, atol=1e-12)


def test_rotating_triangles_lengths():
    c = rotating_triangles()
    g = c.graph
    motion = rotating_motion(default_alphas())
    assert motion.max_length_error() < 1e-9
    for u, v in c.blue_edges:
        assert motion.labeling.length(u, v) == pytest.approx(1.)
    triangle = [g.index_of(x) for x in ('1', '4', '5')]
    assert motion.labeling.length(triangle[0], triangle[1]) == \
        pytest.approx(3 / 4)
    assert motion.labeling.length(triangle[1], triangle[2]) == \
        pytest.approx(3 * SQ3 / 4)
    assert recover_coloring(motion) == c


def test_zigzag_with_axis_vectors_is_grid():
    c = prism_coloring()
    ga = component_grid(c.graph, c)
    zigzag = ZigzagData([(0, j) for j in range(1, 3)],
                        [(i, 0) for i in range(1, 4)])
    grid = grid_motion(ga)
    motion = zigzag_motion(ga, zigzag)
    assert np.allclose(motion.labeling.lengths, grid.labeling.lengths)


def test_zigzag_errors():
    with pytest.raises(ContractError):
        ZigzagData([(0, 0), (0, 0)], [(1, 0)])
    c = prism_coloring()
    ga = component_grid(c.graph, c)
    with pytest.raises(ContractError):
        zigzag_motion(ga, ZigzagData([(0, 1)], [(1, 0), (2, 0), (3, 0)]))


def test_alpha_checks():
    c = c4_delta_two()
    ga = component_grid(c.graph, c)
    with pytest.raises(ContractError):
        grid_motion(ga, [0.])
    with pytest.raises(ContractError):
        grid_motion(ga, [0., 7.])


def test_c4_flex3d():
    g = load_fixture('C4')
    motion = flex3d(g, 0, 2)
    assert motion.dimension == 3
    assert motion.max_length_error() < 1e-9
    assert motion.distance_variation(0, 2) > 1e-6


@pytest.mark.parametrize('name', ['C4', 'K23', 'K33', 'STAR3', 'PRISM',
                                  'FIG2L', 'FIG2R', 'FIG8L', 'FIG8R', 'FIG9',
                                  'FIG12', 'ROTGRAPH'])
def test_flex3d_on_fixtures(name):
    g = load_fixture(name)
    motion = flex3d(g)
    assert motion.max_length_error() < 1e-9
    assert motion.distance_variation(*motion_pair(g)) > 1e-6


def motion_pair(g):
    for u in g.vertices:
        for v in range(u + 1, g.vertex_count):
            if not g.has_edge(u, v):
                return u, v


def test_prism_flex3d_with_pair():
    g = load_fixture('PRISM')
    motion = flex3d(g, g.index_of('a'), g.index_of('e'))
    assert motion.validate()


def test_flex3d_errors():
    with pytest.raises(ContractError) as exc_info:
        flex3d(load_fixture('K4'))
    assert 'complete graph' in str(exc_info.value)
    with pytest.raises(ContractError):
        flex3d(load_fixture('PRISM'), 0, 1)


def rigid_motion(n_frames=12):
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    labeling = Labeling(g, {(0, 1): 1., (1, 2): 1., (0, 2): 1.})
    triangle = np.array([[0., 0.], [1., 0.], [0.5, math.sqrt(3) / 2]])
    frames = [Frame(a, triangle + [a, 0.]) for a in default_alphas(n_frames)]
    return Motion(g, labeling, frames, 'external')


def test_rigid_motion_has_no_flex():
    motion = rigid_motion()
    assert not motion.validate()
    coloring, verdict = detect_flex(motion)
    assert not coloring.red_edges
    assert verdict.reason == 'no flex detected'


def test_recover_needs_enough_frames():
    with pytest.raises(ContractError):
        recover_coloring(rigid_motion(4))
    with pytest.raises(ContractError):
        recover_coloring(flex3d(load_fixture('C4')))


def test_recover_rejects_independent_rotations():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    labeling = Labeling(g, {e: 1. for e in g.edges})
    frames = []
    for a in default_alphas(12):
        p2 = np.array([math.cos(2 * a), math.sin(2 * a)])
        positions = np.array([[math.cos(a), math.sin(a)], [0., 0.], p2,
                              p2 + [math.cos(3 * a), math.sin(3 * a)]])
        frames.append(Frame(a, positions))
    with pytest.raises(ClassificationError):
        recover_coloring(Motion(g, labeling, frames, 'external'))


def moved_frames(motion, step=0.3):
    frames = []
    for k, frame in enumerate(motion.frames):
        c, s = math.cos(step * k), math.sin(step * k)
        turned = frame.positions @ np.array([[c, s], [-s, c]])
        frames.append(Frame(frame.alpha, turned + [k, -2. * k]))
    return Motion(motion.graph, motion.labeling, frames, 'external')


def test_recover_ignores_frame_isometries():
    c = c4_delta_two()
    motion = moved_frames(grid_motion(component_grid(c.graph, c)))
    assert recover_coloring(motion) == c


def pinned_motion(motion, edge):
    frames = [Frame(f.alpha, p)
              for f, p in zip(motion.frames, motion.pinned(edge))]
    return Motion(motion.graph, motion.labeling, frames, 'external')


def test_recover_from_pinned_frames():
    c = prism_coloring()
    motion = zigzag_motion(component_grid(c.graph, c))
    assert recover_coloring(pinned_motion(motion, (0, 1))) == c
    # Pinning a red edge makes the red edges keep their direction.
    assert recover_coloring(pinned_motion(motion, (0, 3))) == c.swapped()


def test_rotating_rigid_triangle_is_blue():
    motion = moved_frames(rigid_motion())
    coloring, verdict = detect_flex(motion)
    assert not coloring.red_edges
    assert len(coloring.blue_edges) == 3
    assert verdict.reason == 'no flex detected'


def test_recover_rejects_changing_lengths():
    g = Graph(2, [(0, 1)])
    labeling = Labeling(g, {(0, 1): 1.})
    frames = [Frame(a, np.array([[0., 0.], [1. + a, 0.]]))
              for a in default_alphas(12)]
    with pytest.raises(ClassificationError):
        recover_coloring(Motion(g, labeling, frames, 'external'))


def test_labeling_checks():
    g = Graph(2, [(0, 1)])
    with pytest.raises(ContractError):
        Labeling(g, {(0, 1): 0.})
    with pytest.raises(ContractError):
        Labeling(g, {})


def test_motion_json():
    c = c4_delta_two()
    motion = grid_motion(component_grid(c.graph, c), default_alphas(8))
    data = motion.to_json()
    assert data['dimension'] == 2
    assert data['construction'] == 'grid'
    assert len(data['frames']) == 8
    assert data['coloring']['red'] == [[0, 3], [2, 3]]
    assert [e['length'] for e in data['labeling']] == [1., 1., 1., 1.]


def test_svg_export(tmp_path):
    c = c4_delta_two()
    motion = grid_motion(component_grid(c.graph, c), default_alphas(12))
    documents = svg_frames(motion)
    assert len(documents) == 12
    assert all(d.startswith('<svg') and d.count('<line') == 4
               for d in documents)
    paths = write_svg_frames(motion, str(tmp_path / 'frames'), stem='c4')
    assert len(paths) == 12
    assert paths[0].endswith('c4_000.svg')
    animated = animated_svg(motion)
    assert animated.count('<animate ') == 4 * 4 + 2 * 4
    assert animated.count('<line') == 4


def test_svg_export_spatial():
    motion = flex3d(load_fixture('C4'), alphas=default_alphas(6))
    assert len(svg_frames(motion)) == 6
