"""
Benchmark graphs distributed as MATLAB files.

Each `<Name>.mat` holds a sparse adjacency matrix under the key `net`. The
source is either a directory containing the files or a base URL they can be
downloaded from; nothing is fetched unless a source is named. Each graph is
converted to a pairs edge list `<out>/<Name>.txt`.
"""
import io
import logging
import os
import shutil
import tempfile
import urllib.request

from scipy import io as sio
from scipy import sparse

from ..exceptions import DatasetMissingError, GraphFormatError

logger = logging.getLogger(__name__)

GRAPHS = ('Ecoli', 'NS', 'PB', 'Power', 'Router', 'USAir', 'Yeast')
MAT_KEY = 'net'


def retrieve(source, name, directory):
    """Local path of `<name>.mat`, downloading it into `directory` when `source` is a URL."""
    filename = '{}.mat'.format(name)
    if '://' not in source:
        path = os.path.join(source, filename)
        if not os.path.exists(path):
            raise DatasetMissingError('No {} in {}.'.format(filename, source))
        return path
    target = os.path.join(directory, filename)
    url = '{}/{}'.format(source.rstrip('/'), filename)
    logger.info('Downloading %s', url)
    try:
        urllib.request.urlretrieve(url, target)
    except OSError as e:
        raise DatasetMissingError('Cannot download {}: {}'.format(url, e))
    return target


def convert(mat_path, out_path, key=MAT_KEY):
    """Write the undirected simple links of the matrix in `mat_path`; returns the link count."""
    try:
        matrix = sio.loadmat(mat_path)[key]
    except KeyError:
        raise GraphFormatError('{} holds no {!r} matrix.'.format(mat_path, key))
    except (ValueError, TypeError) as e:
        raise GraphFormatError('{} is not a MATLAB file: {}'.format(mat_path, e))
    matrix = sparse.coo_matrix(matrix)
    edges = sorted({(min(u, v), max(u, v)) for u, v in zip(matrix.row.tolist(), matrix.col.tolist()) if u != v})
    with io.open(out_path, 'w', encoding='utf-8') as stream:
        for u, v in edges:
            stream.write('{} {}\n'.format(u, v))
    return len(edges)


def fetch_datasets(source, out, names=GRAPHS):
    """Retrieve and convert each named graph; returns [(name, links)]."""
    os.makedirs(out, exist_ok=True)
    scratch = tempfile.mkdtemp()
    converted = []
    try:
        for name in names:
            links = convert(retrieve(source, name, scratch), os.path.join(out, '{}.txt'.format(name)))
            logger.info('%s: %d links', name, links)
            converted.append((name, links))
    finally:
        shutil.rmtree(scratch)
    return converted
