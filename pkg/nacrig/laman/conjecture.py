# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""
Exhaustive check, for small Laman graphs, that a graph which is not
triangle-connected has a NAC-coloring.

Progress is saved after each vertex count in a line-oriented checkpoint
file so that long sweeps can be resumed.
"""
import hashlib
import logging
import os

from tqdm import tqdm

from nacrig.colorings.coloring import is_nac
from nacrig.colorings.search import find_nac
from nacrig.commons.parallel import ordered_map
from nacrig.config import get_setting
from nacrig.exceptions import CapacityError, CheckpointError, ContractError
from nacrig.graphs.io import parse_graph6
from nacrig.laman.henneberg import HennebergTree
from nacrig.laman.problematic import problematic_status
from nacrig.structure.delta import delta_classes

logger = logging.getLogger(__name__)

CHECKPOINT_HEADER = '# nacrig conjecture checkpoint v1'
COUNT_KEYS = ('total', 'delta', 'nac', 'problematic', 'ambiguous')
LIST_KEYS = ('counterexamples', 'inconsistencies')


def level_hash(codes):
    data = '\n'.join(c.text for c in codes).encode('ascii')
    return hashlib.sha256(data).hexdigest()


class LevelResult(object):
    """
    Counts for all Laman graphs with `n` vertices.
    """
    def __init__(self, n, counts, counterexamples, inconsistencies, digest):
        self.n = n
        self.counts = dict(counts)
        self.counterexamples = list(counterexamples)
        self.inconsistencies = list(inconsistencies)
        self.digest = digest

    def to_line(self):
        fields = ['n={}'.format(self.n)]
        fields += ['{}={}'.format(k, self.counts[k]) for k in COUNT_KEYS]
        fields += ['counterexamples=' + ','.join(self.counterexamples),
                   'inconsistencies=' + ','.join(self.inconsistencies),
                   'sha256=' + self.digest]
        return ' '.join(fields)

    @classmethod
    def from_line(cls, line, line_no):
        try:
            fields = dict(f.split('=', 1) for f in line.split())
            n = int(fields['n'])
            counts = {k: int(fields[k]) for k in COUNT_KEYS}
            lists = {k: [c for c in fields[k].split(',') if c]
                     for k in LIST_KEYS}
            digest = fields['sha256']
        except (KeyError, ValueError) as e:
            raise CheckpointError(f'Corrupt checkpoint line {line_no}: '
                                  f'{e!r}') from None
        if len(digest) != 64 or any(ch not in '0123456789abcdef'
                                    for ch in digest):
            raise CheckpointError(f'Corrupt hash on checkpoint line {line_no}')
        return cls(n, counts, lists['counterexamples'],
                   lists['inconsistencies'], digest)

    def to_json(self):
        return {'total': self.counts['total'],
                'deltaConnected': self.counts['delta'],
                'withNac': self.counts['nac'],
                'problematic': self.counts['problematic'],
                'ambiguous': self.counts['ambiguous']}


def read_checkpoint(path, min_n):
    if not os.path.exists(path):
        return []
    with open(path, 'r') as f:
        lines = f.read().splitlines()
    if not lines or lines[0].strip() != CHECKPOINT_HEADER:
        raise CheckpointError(f'{path} is not a nacrig checkpoint')
    results = []
    for line_no, line in enumerate(lines[1:], 2):
        if not line.strip() or line.startswith('#'):
            continue
        res = LevelResult.from_line(line, line_no)
        expected = results[-1].n + 1 if results else min_n
        if res.n != expected:
            raise CheckpointError(f'Checkpoint line {line_no} has n={res.n}, '
                                  f'expected n={expected}')
        results.append(res)
    return results


def write_checkpoint(path, results):
    tmp_path = path + '.tmp'
    with open(tmp_path, 'w') as f:
        f.write(CHECKPOINT_HEADER + '\n')
        for res in results:
            f.write(res.to_line() + '\n')
    os.replace(tmp_path, path)


class ConjectureReport(object):
    def __init__(self, max_n, cap, levels, resumed_from=None):
        self.max_n = max_n
        self.cap = cap
        self.levels = levels
        self.resumed_from = resumed_from

    @property
    def per_n(self):
        return {res.n: res.counts for res in self.levels}

    @property
    def counterexamples(self):
        return [c for res in self.levels for c in res.counterexamples]

    @property
    def inconsistencies(self):
        return [c for res in self.levels for c in res.inconsistencies]

    @property
    def ok(self):
        return not self.counterexamples and not self.inconsistencies

    def to_json(self):
        return {
            'schema': get_setting('report', 'schema'),
            'maxN': self.max_n,
            'cap': self.cap,
            'perN': {str(res.n): res.to_json() for res in self.levels},
            'counterexamples': self.counterexamples,
            'inconsistencies': self.inconsistencies,
            'resumedFrom': self.resumed_from,
        }


def _check_graph(code):
    g = parse_graph6(code)
    delta_connected = delta_classes(g).is_delta_connected()
    witness = find_nac(g, n_threads=1)
    witness_ok = witness is None or is_nac(g, witness).ok
    problematic, ambiguous = problematic_status(g)
    return delta_connected, witness is not None, witness_ok, problematic, \
        bool(ambiguous)


def _check_level(n, codes, n_threads, progress):
    counts = dict.fromkeys(COUNT_KEYS, 0)
    counterexamples, inconsistencies = [], []
    results = ordered_map(_check_graph, [c.code for c in codes],
                          n_threads=n_threads, chunksize=8)
    for code, res in zip(codes, tqdm(results, total=len(codes),
                                     desc=f'n={n}', disable=not progress)):
        delta_connected, nac, witness_ok, problematic, ambiguous = res
        counts['total'] += 1
        counts['delta'] += delta_connected
        counts['nac'] += nac
        counts['problematic'] += problematic
        counts['ambiguous'] += ambiguous
        if not delta_connected and not nac:
            logger.warning(f'Counterexample found: {code}')
            counterexamples.append(code.text)
        elif (delta_connected and nac) or not witness_ok:
            logger.warning(f'Inconsistent NAC result for {code}')
            inconsistencies.append(code.text)
    return LevelResult(n, counts, counterexamples, inconsistencies,
                       level_hash(codes))


def verify_conjecture(max_n, checkpoint=None, progress=False,
                      n_threads=None):
    """
    Checks every Laman graph on min_n..max_n vertices (laman.min_n and the
    given bound) for the equivalence "not triangle-connected iff it has a
    NAC-coloring".

    :param max_n: Largest vertex count, at most laman.max_n.
    :param checkpoint: Optional checkpoint path, read and updated per level.
    :param progress: Show a tqdm progress bar per level.
    :return: ConjectureReport
    :raises CapacityError: If max_n exceeds the configured cap.
    :raises CheckpointError: If the checkpoint is corrupt or does not match
        the enumeration.
    """
    cap = get_setting('laman', 'max_n')
    min_n = get_setting('laman', 'min_n')
    if max_n > cap:
        raise CapacityError(f'Conjecture sweep is capped at n={cap}, '
                            f'{max_n} requested')
    if max_n < min_n:
        raise ContractError(f'max_n must be at least {min_n}')

    tree = HennebergTree(max_n, n_threads=n_threads)
    done = read_checkpoint(checkpoint, min_n) if checkpoint else []
    levels, resumed_from = [], None
    for res in done:
        if res.n > max_n:
            break
        if level_hash(tree.level(res.n)) != res.digest:
            raise CheckpointError(f'Checkpoint hash mismatch for n={res.n}')
        levels.append(res)
        resumed_from = f'{checkpoint}#n={res.n}'
    if resumed_from is not None:
        logger.info(f'Resuming from {resumed_from}')

    for n in range(min_n + len(levels), max_n + 1):
        codes = tree.level(n)
        levels.append(_check_level(n, codes, n_threads, progress))
        if checkpoint:
            write_checkpoint(checkpoint, levels + done[len(levels):])
    return ConjectureReport(max_n, cap, levels, resumed_from)
