# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import logging

from nacrig.colorings.search import coloring_for_disconnected, enumerate_nac
from nacrig.config import get_setting
from nacrig.graphs.io import serialize_graph6
from nacrig.laman.pebble import is_laman
from nacrig.structure.report import analyze_structure

logger = logging.getLogger(__name__)

EXISTS = 'flexible-labeling-exists'
NONE_EXISTS = 'none-exists'
UNKNOWN = 'unknown-within-bounds'

EXIT_CODES = {EXISTS: 0, NONE_EXISTS: 1, UNKNOWN: 3}


class AnalysisReport(object):
    """
    Verdict on the existence of a flexible labeling, with its certificate:
    a validated NAC-coloring, a structural obstruction or an exhaustive
    enumeration.
    """
    def __init__(self, graph, input_format, laman, structure, nac, status,
                 theorem, witness=None):
        self.graph = graph
        self.input_format = input_format
        self.laman = laman
        self.structure = structure
        self.nac = nac
        self.status = status
        self.theorem = theorem
        self.witness = witness

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def to_json(self):
        return {
            'schema': get_setting('report', 'schema'),
            'input': {'format': self.input_format,
                      'n': self.graph.vertex_count,
                      'edges': self.graph.n_edges,
                      'graph6': serialize_graph6(self.graph),
                      'labels': list(self.graph.labels)},
            'laman': self.laman,
            'structure': self.structure.to_json(),
            'nac': self.nac,
            'verdict': {'status': self.status,
                        'theorem': self.theorem,
                        'witness': None if self.witness is None
                        else self.witness.to_json()},
        }


def nac_listing(colorings, up_to_swap, max_colorings):
    truncated = max_colorings is not None and len(colorings) > max_colorings
    shown = colorings[:max_colorings] if truncated else colorings
    if truncated:
        logger.warning('Listing {} of {} NAC-colorings'
                       .format(max_colorings, len(colorings)))
    return {'exists': bool(colorings),
            'count': len(colorings),
            'upToSwap': up_to_swap,
            'truncated': truncated,
            'colorings': [c.to_json() for c in shown]}


def analyze(g, input_format='graph6', max_cut_size=None, up_to_swap=False,
            max_colorings=-1, n_threads=None):
    """
    Builds the AnalysisReport of g.

    :param max_colorings: Cap on the listed colorings, -1 reads
        report.max_colorings and None lists everything.
    """
    if max_colorings == -1:
        max_colorings = get_setting('report', 'max_colorings')
    structure = analyze_structure(g, max_cut_size)
    laman = is_laman(g)

    if structure.spanned_by is not None:
        nac = nac_listing([], up_to_swap, max_colorings)
        return AnalysisReport(g, input_format, laman, structure, nac,
                              NONE_EXISTS, 'spanning-triangle-class')
    if not structure.edge_bound_ok:
        nac = nac_listing([], up_to_swap, max_colorings)
        return AnalysisReport(g, input_format, laman, structure, nac,
                              NONE_EXISTS, 'edge-count-bound')

    split = coloring_for_disconnected(g)
    max_classes = get_setting('nac', 'max_classes')
    if len(structure.delta_classes) <= max_classes:
        colorings = enumerate_nac(g, up_to_swap, n_threads)
        nac = nac_listing(colorings, up_to_swap, max_colorings)
        if split is not None:
            nac['note'] = 'disconnected: coloring one component red is ' \
                          'a NAC-coloring'
            return AnalysisReport(g, input_format, laman, structure, nac,
                                  EXISTS, 'disconnected-components', split)
        if colorings:
            return AnalysisReport(g, input_format, laman, structure, nac,
                                  EXISTS, 'nac-coloring', colorings[0])
        return AnalysisReport(g, input_format, laman, structure, nac,
                              NONE_EXISTS, 'exhaustive-enumeration')

    logger.warning('{} triangle classes, skipping the exhaustive search'
                   .format(len(structure.delta_classes)))
    nac = {'exists': None, 'count': None, 'upToSwap': up_to_swap,
           'truncated': True, 'colorings': []}
    if split is not None:
        return AnalysisReport(g, input_format, laman, structure, nac,
                              EXISTS, 'disconnected-components', split)
    witnesses = structure.witness_colorings()
    if witnesses:
        theorem, witness = witnesses[0]
        nac['exists'] = True
        return AnalysisReport(g, input_format, laman, structure, nac,
                              EXISTS, theorem, witness)
    return AnalysisReport(g, input_format, laman, structure, nac, UNKNOWN,
                          'bounded-search')
