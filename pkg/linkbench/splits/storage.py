import io
import logging
import math
import os

from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from ..exceptions import ManifestError
from ..graphs import read_pairs, write_pairs
from .folds import SplitBundle
from .pairs import PairSet, Polarity
from .serializers import SplitManifestSerializer

logger = logging.getLogger(__name__)

MANIFEST = 'manifest.json'
PAIR_FILES = (
    ('train_pos', 'train_edges.txt', Polarity.POSITIVE),
    ('test_pos', 'test_pos.txt', Polarity.POSITIVE),
    ('train_neg', 'train_neg.txt', Polarity.NEGATIVE),
    ('test_neg', 'test_neg.txt', Polarity.NEGATIVE),
)


def fold_directory(directory, fold_index):
    return os.path.join(directory, 'fold_{}'.format(fold_index))


def write_json(path, data):
    with io.open(path, 'wb') as stream:
        stream.write(JSONRenderer().render(data))
        stream.write(b'\n')


def read_json(path):
    with io.open(path, 'rb') as stream:
        return JSONParser().parse(stream)


def save_splits(bundles, directory, graph, config_hash=''):
    checksum = graph.checksum()
    for bundle in bundles:
        target = fold_directory(directory, bundle.fold_index)
        os.makedirs(target, exist_ok=True)
        for attribute, filename, _ in PAIR_FILES:
            write_pairs(graph, getattr(bundle, attribute), os.path.join(target, filename))
        serializer = SplitManifestSerializer(data={
            'fold_index': bundle.fold_index,
            'seed': bundle.seed,
            'test_fraction': bundle.test_fraction,
            'graph_checksum': checksum,
            'config_hash': config_hash,
            'train_links': len(bundle.train_pos),
            'test_links': len(bundle.test_pos),
        })
        serializer.is_valid(raise_exception=True)
        write_json(os.path.join(target, MANIFEST), serializer.validated_data)
    logger.info('Saved %d folds to %s.', len(bundles), directory)


def load_fold(target, graph, seed=None, test_fraction=None):
    """
    Read one persisted fold. When `seed` or `test_fraction` is given the
    manifest must record the same value.
    """
    try:
        data = read_json(os.path.join(target, MANIFEST))
    except (IOError, OSError) as e:
        raise ManifestError('Cannot read fold manifest in {}: {}'.format(target, e))
    serializer = SplitManifestSerializer(data=data)
    if not serializer.is_valid():
        raise ManifestError('Invalid manifest in {}: {}'.format(target, dict(serializer.errors)))
    manifest = serializer.validated_data
    if manifest['graph_checksum'] != graph.checksum():
        raise ManifestError('Fold in {} was made from a different graph.'.format(target))
    if seed is not None and manifest['seed'] != seed:
        raise ManifestError('Fold in {} was made with seed {}, not {}; rerun split.'.format(
            target, manifest['seed'], seed))
    if test_fraction is not None and not math.isclose(manifest['test_fraction'], test_fraction):
        raise ManifestError('Fold in {} holds test fraction {}, not {}; rerun split.'.format(
            target, manifest['test_fraction'], test_fraction))

    pair_sets = {
        attribute: PairSet(read_pairs(os.path.join(target, filename), graph), polarity)
        for attribute, filename, polarity in PAIR_FILES
    }
    train_graph = graph.without_edges(pair_sets['test_pos'])
    if train_graph.edge_set != pair_sets['train_pos'].members:
        raise ManifestError('Train links in {} do not match the graph minus test links.'.format(target))
    return SplitBundle(
        fold_index=manifest['fold_index'],
        seed=manifest['seed'],
        train_graph=train_graph,
        test_fraction=manifest['test_fraction'],
        **pair_sets
    )


def load_splits(directory, graph, seed=None, test_fraction=None):
    folds = []
    index = 0
    while os.path.isdir(fold_directory(directory, index)):
        folds.append(load_fold(fold_directory(directory, index), graph, seed=seed, test_fraction=test_fraction))
        index += 1
    if not folds:
        raise ManifestError('No persisted folds found in {}.'.format(directory))
    return folds
