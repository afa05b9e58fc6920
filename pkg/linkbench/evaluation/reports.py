import csv
import io
import logging
from collections import OrderedDict
from dataclasses import astuple, dataclass, fields
from typing import Optional

import numpy as np

from .. import __version__
from ..exceptions import DataError

logger = logging.getLogger(__name__)

MEAN_FOLD = 'mean'
HEADER = ('graph', 'fold', 'approach', 'precision', 'precision_thr', 'auc', 'max_score', 'min_score', 'time_ms')
OPTIONAL = ('precision_thr', 'time_ms')


@dataclass(frozen=True)
class MetricsRow:
    graph: str
    fold: str
    approach: str
    precision: float
    precision_thr: Optional[float]
    auc: float
    max_score: float
    min_score: float
    time_ms: Optional[float] = None

    def __post_init__(self):
        if not (0.0 <= self.precision <= 1.0 and 0.0 <= self.auc <= 1.0):
            raise ValueError('precision and auc must lie in [0, 1] ({}).'.format(self))
        if self.max_score < self.min_score:
            raise ValueError('max_score {} is below min_score {}.'.format(self.max_score, self.min_score))


def _format(value):
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse(name, value):
    if name in ('graph', 'fold', 'approach'):
        return value
    if value == '' and name in OPTIONAL:
        return None
    return float(value)


def _mean(values):
    if any(value is None for value in values):
        return None
    return float(np.mean(values))


class MetricsReport(object):
    """Per-fold metric rows of one benchmark run."""
    def __init__(self, rows=(), config_hash=''):
        self.rows = list(rows)
        self.config_hash = config_hash

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def add(self, row):
        self.rows.append(row)

    def fold_rows(self):
        return [row for row in self.rows if row.fold != MEAN_FOLD]

    def aggregate(self):
        """Arithmetic mean over folds for every (graph, approach), in first-seen order."""
        groups = OrderedDict()
        for row in self.fold_rows():
            groups.setdefault((row.graph, row.approach), []).append(row)
        means = []
        for (graph, approach), rows in groups.items():
            values = {
                f.name: _mean([getattr(row, f.name) for row in rows])
                for f in fields(MetricsRow) if f.name not in ('graph', 'fold', 'approach')
            }
            means.append(MetricsRow(graph=graph, fold=MEAN_FOLD, approach=approach, **values))
        return means

    def with_aggregate(self):
        return MetricsReport(self.fold_rows() + self.aggregate(), config_hash=self.config_hash)

    def write_csv(self, path):
        with io.open(path, 'w', encoding='utf-8', newline='') as stream:
            stream.write('# linkbench {} config={}\n'.format(__version__, self.config_hash))
            writer = csv.writer(stream, lineterminator='\n')
            writer.writerow(HEADER)
            for row in self.rows:
                writer.writerow([_format(value) for value in astuple(row)])
        logger.info('Wrote %d metric rows to %s.', len(self.rows), path)

    @classmethod
    def read_csv(cls, path):
        config_hash = ''
        with io.open(path, encoding='utf-8', newline='') as stream:
            lines = stream.read().splitlines()
        if lines and lines[0].startswith('#'):
            config_hash = lines[0].rpartition('config=')[2]
            lines = lines[1:]
        reader = csv.reader(lines)
        header = tuple(next(reader, ()))
        if header != HEADER:
            raise DataError('{} is not a metrics report (header {}).'.format(path, ','.join(header)))
        rows = []
        for record in reader:
            if len(record) != len(HEADER):
                raise DataError('{}: expected {} columns, got {}.'.format(path, len(HEADER), len(record)))
            rows.append(MetricsRow(**{name: _parse(name, value) for name, value in zip(HEADER, record)}))
        return cls(rows, config_hash=config_hash)

    def render_markdown(self):
        """
        AUC and precision tables with approaches as rows and graphs as
        columns, from the fold means. Precision cells carry the thresholded
        value in parentheses when there is one; the best AUC of each graph
        is bold.
        """
        means = self.aggregate() or [row for row in self.rows if row.fold == MEAN_FOLD]
        graphs = list(OrderedDict.fromkeys(row.graph for row in means))
        approaches = list(OrderedDict.fromkeys(row.approach for row in means))
        cells = {(row.graph, row.approach): row for row in means}
        best = {
            graph: max(row.auc for row in means if row.graph == graph)
            for graph in graphs
        }

        def auc_cell(row):
            text = '{:.3f}'.format(row.auc)
            return '**{}**'.format(text) if row.auc == best[row.graph] else text

        def precision_cell(row):
            text = '{:.2f}'.format(row.precision)
            if row.precision_thr is not None:
                text += ' ({:.2f})'.format(row.precision_thr)
            return text

        lines = ['<!-- linkbench {} config={} -->'.format(__version__, self.config_hash), '']
        for title, render in (('AUC', auc_cell), ('Precision', precision_cell)):
            lines.append('## {}'.format(title))
            lines.append('')
            lines.append('| Approach | {} |'.format(' | '.join(graphs)))
            lines.append('|---|{}'.format('---|' * len(graphs)))
            for approach in approaches:
                row_cells = [
                    render(cells[(graph, approach)]) if (graph, approach) in cells else '-'
                    for graph in graphs
                ]
                lines.append('| {} | {} |'.format(approach, ' | '.join(row_cells)))
            lines.append('')
        return '\n'.join(lines)
