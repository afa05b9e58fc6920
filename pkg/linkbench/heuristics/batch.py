import csv
import io
import time
from collections import namedtuple

from .scores import SCORERS, HeuristicId, ScoredPair, common_neighbourhood

BatchScores = namedtuple('BatchScores', ['scores', 'ms_per_link'])

SCORE_HEADER = ('u', 'v', 'heuristic', 'score', 'truth')


def _truth_of(pairs):
    return getattr(pairs, 'polarity', None)


def score_pairs(g, h, pairs):
    h = HeuristicId(h)
    scorer = SCORERS[h]
    truth = _truth_of(pairs)
    return [
        ScoredPair(u, v, scorer(g, u, v, common_neighbourhood(g, u, v)), truth)
        for u, v in pairs
    ]


def score_batch(g, h, pairs):
    """
    Score every pair with heuristic `h`, timing the whole batch.

    Returns `BatchScores(scores, ms_per_link)`; `ms_per_link` is None for an
    empty batch.
    """
    pairs = pairs if hasattr(pairs, 'polarity') else list(pairs)
    started = time.perf_counter()
    scores = score_pairs(g, h, pairs)
    elapsed = time.perf_counter() - started
    if not scores:
        return BatchScores([], None)
    return BatchScores(scores, elapsed * 1000.0 / len(scores))


def write_scores_csv(path, graph, h, scored):
    h = HeuristicId(h)
    with io.open(path, 'w', encoding='utf-8', newline='') as stream:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(SCORE_HEADER)
        for pair in scored:
            truth = '' if pair.truth is None else str(pair.truth)
            writer.writerow((graph.labels[pair.u], graph.labels[pair.v], h.value, repr(pair.score), truth))
