import io
import logging

from ..exceptions import EmptyGraphError, GraphFormatError
from .core import Graph, canonical_pair

logger = logging.getLogger(__name__)

PAIRS = 'pairs'
TRIPLES = 'triples'
FORMATS = (PAIRS, TRIPLES)

_TOKEN_COUNTS = {PAIRS: 2, TRIPLES: 3}


def _records(stream):
    for line_number, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        yield line_number, line.split()


def read_edge_list(stream, format=PAIRS, source='<stream>'):
    if format not in _TOKEN_COUNTS:
        raise GraphFormatError('Unknown edge list format {!r}.'.format(format))
    expected = _TOKEN_COUNTS[format]

    index = {}
    edges = set()
    self_loops = duplicates = 0
    for line_number, tokens in _records(stream):
        if len(tokens) != expected:
            raise GraphFormatError(
                'expected {} tokens, got {}'.format(expected, len(tokens)),
                line_number=line_number,
            )
        # Triples: subject relation object; the relation type is discarded.
        ends = (tokens[0], tokens[-1])
        u, v = (index.setdefault(label, len(index)) for label in ends)
        if u == v:
            self_loops += 1
            continue
        pair = canonical_pair(u, v)
        if pair in edges:
            duplicates += 1
            continue
        edges.add(pair)

    if not index:
        raise EmptyGraphError('{} contains no links.'.format(source))
    if self_loops or duplicates:
        logger.warning(
            'Dropped %d self-loops and %d duplicate links from %s.',
            self_loops, duplicates, source,
        )
    labels = sorted(index, key=index.get)
    return Graph(edges, labels=labels)


def load_edge_list(path, format=PAIRS):
    with io.open(path, encoding='utf-8') as stream:
        graph = read_edge_list(stream, format=format, source=path)
    logger.info('Loaded %s: %d nodes, %d links.', path, graph.node_count, graph.edge_count)
    return graph


def load_attributes(path, graph):
    """Return a copy of `graph` carrying the categorical attributes in `path`."""
    values = [None] * graph.node_count
    with io.open(path, encoding='utf-8') as stream:
        for line_number, tokens in _records(stream):
            if len(tokens) != 2:
                raise GraphFormatError(
                    'expected 2 tokens, got {}'.format(len(tokens)),
                    line_number=line_number,
                )
            label, value = tokens
            if label not in graph.index:
                raise GraphFormatError('unknown node {!r}'.format(label), line_number=line_number)
            values[graph.index[label]] = value
    return Graph(graph.edges(), labels=graph.labels, attributes=values)


def write_pairs(graph, pairs, path):
    with io.open(path, 'w', encoding='utf-8') as stream:
        for u, v in pairs:
            stream.write('{} {}\n'.format(graph.labels[u], graph.labels[v]))


def write_edge_list(graph, path):
    """Write `graph` in pairs format; isolated nodes are not represented."""
    write_pairs(graph, graph.edges(), path)


def read_pairs(path, graph):
    """Read a pairs file whose labels all belong to `graph`."""
    pairs = []
    with io.open(path, encoding='utf-8') as stream:
        for line_number, tokens in _records(stream):
            if len(tokens) != 2:
                raise GraphFormatError(
                    'expected 2 tokens, got {}'.format(len(tokens)),
                    line_number=line_number,
                )
            try:
                u, v = (graph.index[token] for token in tokens)
            except KeyError as e:
                raise GraphFormatError('unknown node {}'.format(e), line_number=line_number)
            pairs.append(canonical_pair(u, v))
    return pairs
