"""
The four pipeline steps behind the command line: stats, split, bench and
report. Each takes a validated ExperimentConfig, writes its outputs under
`config.out` and appends a provenance record.
"""
import csv
import io
import logging
import os

from .. import __version__
from ..exceptions import ConfigError, DatasetMissingError, ManifestError
from ..evaluation import (
    AucSampleSpec,
    MetricsReport,
    MetricsRow,
    auc_sampled,
    precision_at_L,
    precision_thresholded,
    time_heuristic,
    time_model,
)
from ..graphs import load_attributes, load_edge_list, stats
from ..heuristics import HeuristicId, ScoredPair, score_pairs
from ..predictors import SealModel, WlnmModel, extraction_graph, save_model
from ..splits import make_splits
from ..splits.storage import load_splits, save_splits
from .provenance import append_provenance

logger = logging.getLogger(__name__)

FETCH_COMMAND = 'linkbench fetch'

WLNM = 'WLNM'
SEAL = 'SEAL'
GNN_APPROACHES = (WLNM, SEAL)
SELECTORS = ('ALL', 'HEURISTICS', 'GNN')

STATS_FILE = 'stats.csv'
METRICS_FILE = 'metrics.csv'
REPORT_FILE = 'report.md'
STATS_HEADER = (
    'graph', 'nodes', 'links', 'avg_degree', 'triangles', 'avg_clustering', 'apl', 'diameter', 'size_class',
)


def parse_selector(selector, config):
    """Approach tags named by `selector`, in bench order."""
    approaches = []
    for token in (selector or 'ALL').split(','):
        token = token.strip().upper()
        if token == 'ALL':
            names = list(config.heuristics) + list(GNN_APPROACHES)
        elif token == 'HEURISTICS':
            names = list(config.heuristics)
        elif token == 'GNN':
            names = list(GNN_APPROACHES)
        elif token in (WLNM, SEAL, 'SEAL-LITE'):
            names = [SEAL if token.startswith(SEAL) else WLNM]
        else:
            try:
                names = [HeuristicId.parse(token).value]
            except ValueError:
                raise ConfigError('Unknown approach {!r}; use a heuristic tag, {} or {}.'.format(
                    token, ', '.join(GNN_APPROACHES), ', '.join(SELECTORS)))
        approaches.extend(name for name in names if name not in approaches)
    return approaches


def graph_names(config, graph=None):
    if graph:
        return [graph]
    names = [dataset['name'] for dataset in config.datasets]
    if not names:
        raise ConfigError('No graph selected: pass --graph or list datasets in the config.')
    return names


def load_dataset(config, name):
    dataset = config.dataset(name)
    path = config.dataset_path(dataset)
    if not os.path.exists(path):
        raise DatasetMissingError(
            'Dataset {} not found at {}; run `{} --source <dir or URL> --out {}` to fetch it.'.format(
                name, path, FETCH_COMMAND, config.data_dir))
    g = load_edge_list(path, format=dataset['format'])
    if dataset['attributes']:
        g = load_attributes(dataset['attributes'], g)
    return g


def _ensure_out(config):
    os.makedirs(config.out, exist_ok=True)


def _number(value):
    if value is None:
        return ''
    return repr(value) if isinstance(value, float) else str(value)


def cmd_stats(config, graph=None, with_paths=True):
    """Topological statistics of each selected graph, written to stats.csv."""
    rows = []
    for name in graph_names(config, graph):
        summary = stats(load_dataset(config, name), with_paths=with_paths, seed=config.seed)
        logger.info('%s: %d nodes, %d links.', name, summary.nodes, summary.links)
        rows.append((name, summary))

    _ensure_out(config)
    with io.open(os.path.join(config.out, STATS_FILE), 'w', encoding='utf-8', newline='') as stream:
        stream.write('# linkbench {} config={}\n'.format(__version__, config.hash))
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(STATS_HEADER)
        for name, summary in rows:
            writer.writerow([name] + [_number(getattr(summary, field)) for field in STATS_HEADER[1:]])
    append_provenance(config, 'stats', [name for name, _ in rows])
    return rows


def split_directory(config, name):
    return os.path.join(config.out, 'splits', name)


def _make_and_save(config, name, g):
    bundles = make_splits(g, folds=config.folds, test_fraction=config.test_fraction, seed=config.seed)
    save_splits(bundles, split_directory(config, name), g, config_hash=config.hash)
    return bundles


def cmd_split(config, graph=None):
    """Random sub-sampling folds for each selected graph, persisted under splits/."""
    folds = {}
    for name in graph_names(config, graph):
        folds[name] = _make_and_save(config, name, load_dataset(config, name))
    append_provenance(config, 'split', list(folds))
    return folds


def fold_set(config, name, g):
    """Persisted folds of `name` when present, otherwise fresh ones that get persisted."""
    directory = split_directory(config, name)
    try:
        bundles = load_splits(directory, g, seed=config.seed, test_fraction=config.test_fraction)
    except ManifestError:
        if os.path.isdir(os.path.join(directory, 'fold_0')):
            raise
        logger.info('No persisted folds for %s; splitting now.', name)
        return _make_and_save(config, name, g)
    if len(bundles) != config.folds:
        raise ManifestError('{} holds {} folds but the config asks for {}.'.format(
            directory, len(bundles), config.folds))
    return bundles


def _metrics_row(config, name, fold, approach, scored, thresholded, time_ms):
    positives = [pair for pair in scored if pair.is_positive]
    negatives = [pair for pair in scored if not pair.is_positive]
    spec = AucSampleSpec.for_test_set(len(positives), seed=config.seed + fold.fold_index, n=config.auc['n'])
    precision_thr, highest, lowest = precision_thresholded(scored)
    return MetricsRow(
        graph=name,
        fold=str(fold.fold_index),
        approach=approach,
        precision=precision_at_L(scored),
        precision_thr=precision_thr if thresholded else None,
        auc=auc_sampled(positives, negatives, spec),
        max_score=highest,
        min_score=lowest,
        time_ms=time_ms,
    )


def bench_heuristic(config, name, fold, tag):
    g = fold.train_graph
    scored = score_pairs(g, tag, fold.test_pos) + score_pairs(g, tag, fold.test_neg)
    time_ms = None
    if config.timing:
        time_ms = time_heuristic(g, tag, list(fold.test_pos) + list(fold.test_neg))
    return _metrics_row(config, name, fold, tag, scored, True, time_ms)


def build_model(config, approach, fold_index):
    cfg = config.train_config(fold_index)
    if approach == WLNM:
        return WlnmModel(k=config.wlnm['k'], hidden=config.wlnm['hidden'], cfg=cfg)
    return SealModel(cfg=cfg, **config.seal)


def model_path(config, name, fold_index, approach):
    directory = os.path.join(config.out, 'models', name, 'fold_{}'.format(fold_index))
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, '{}.npz'.format(approach.lower()))


def bench_model(config, name, fold, approach, graph):
    model = build_model(config, approach, fold.fold_index)
    g = extraction_graph(fold, config.gnn_graph)

    def run():
        model.fit(fold, graph=config.gnn_graph)
        scored = []
        for pairs in (fold.test_pos, fold.test_neg):
            scored.extend(
                ScoredPair(link.u, link.v, link.prob, pairs.polarity)
                for link in model.score_pairs(g, pairs)
            )
        return scored

    scored, elapsed = time_model(run)
    save_model(
        model_path(config, name, fold.fold_index, approach),
        model,
        manifest=model.manifest(fold, graph, config_hash=config.hash),
    )
    return _metrics_row(config, name, fold, model.approach, scored, False, elapsed if config.timing else None)


def cmd_bench(config, approach='ALL', graph=None):
    """Score every selected approach on every fold; writes metrics.csv with fold means."""
    approaches = parse_selector(approach, config)
    report = MetricsReport(config_hash=config.hash)
    names = graph_names(config, graph)
    for name in names:
        g = load_dataset(config, name)
        for fold in fold_set(config, name, g):
            for tag in approaches:
                logger.info('Bench %s fold %d: %s', name, fold.fold_index, tag)
                if tag in GNN_APPROACHES:
                    report.add(bench_model(config, name, fold, tag, g))
                else:
                    report.add(bench_heuristic(config, name, fold, tag))

    report = report.with_aggregate()
    _ensure_out(config)
    report.write_csv(os.path.join(config.out, METRICS_FILE))
    append_provenance(config, 'bench', names)
    return report


def cmd_report(config):
    """Markdown summary of metrics.csv, written to report.md."""
    path = os.path.join(config.out, METRICS_FILE)
    if not os.path.exists(path):
        raise DatasetMissingError('No metrics at {}; run the bench command first.'.format(path))
    report = MetricsReport.read_csv(path)
    markdown = report.render_markdown()
    with io.open(os.path.join(config.out, REPORT_FILE), 'w', encoding='utf-8') as stream:
        stream.write(markdown)
        stream.write('\n')
    append_provenance(config, 'report', sorted({row.graph for row in report}))
    return markdown
