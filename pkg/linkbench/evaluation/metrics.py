from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from ..exceptions import MetricError


@dataclass(frozen=True)
class AucSampleSpec:
    n: int
    seed: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise MetricError('AUC needs at least one comparison, got n={}.'.format(self.n))

    @classmethod
    def for_test_set(cls, positive_count, seed=0, n=None):
        """Half the positive test links, unless `n` is given."""
        if n is None:
            n = max(1, positive_count // 2)
        return cls(n=n, seed=seed)


def _ranked(scored):
    """
    Descending by score. At equal scores negatives come first, so ties never
    flatter a predictor.
    """
    if not scored:
        raise MetricError('Cannot rank an empty list of scored pairs.')
    order = sorted(range(len(scored)), key=lambda i: (-scored[i].score, scored[i].is_positive, i))
    return [scored[i] for i in order]


def _top_l(scored):
    ranked = _ranked(scored)
    positives = sum(1 for pair in ranked if pair.is_positive)
    if not positives:
        raise MetricError('Precision needs at least one positive test link.')
    return ranked[:positives], positives


def precision_at_L(scored):
    """Share of positives among the L best-scored pairs, L = positive count."""
    top, top_l = _top_l(scored)
    return sum(1 for pair in top if pair.is_positive) / top_l


def precision_thresholded(scored):
    """
    Top-L precision counting only positives scored strictly above the
    midpoint of the top-L score range. Returns (precision, max, min).
    """
    top, top_l = _top_l(scored)
    highest = max(pair.score for pair in top)
    lowest = min(pair.score for pair in top)
    threshold = (highest + lowest) / 2.0
    hits = sum(1 for pair in top if pair.is_positive and pair.score > threshold)
    return hits / top_l, highest, lowest


def _scores(items, side):
    values = np.array([getattr(item, 'score', item) for item in items], dtype=np.float64)
    if values.size == 0:
        raise MetricError('AUC needs at least one {} score.'.format(side))
    if not np.all(np.isfinite(values)):
        raise MetricError('AUC scores must be finite.')
    return values


def auc_sampled(scored_pos, scored_neg, spec):
    """
    Monte-Carlo AUC: `spec.n` (positive, negative) draws with replacement,
    a win counting 1 and a tie 0.5.
    """
    positives = _scores(scored_pos, 'positive')
    negatives = _scores(scored_neg, 'negative')
    rng = np.random.default_rng(spec.seed)
    drawn_pos = positives[rng.integers(0, len(positives), size=spec.n)]
    drawn_neg = negatives[rng.integers(0, len(negatives), size=spec.n)]
    wins = np.count_nonzero(drawn_pos > drawn_neg)
    ties = np.count_nonzero(drawn_pos == drawn_neg)
    return (wins + 0.5 * ties) / spec.n


def auc_exact(scored_pos, scored_neg):
    """Mann-Whitney AUC over every positive/negative pair, ties half-credited."""
    positives = _scores(scored_pos, 'positive')
    negatives = _scores(scored_neg, 'negative')
    ranks = rankdata(np.concatenate([positives, negatives]))
    n_pos, n_neg = len(positives), len(negatives)
    u_statistic = ranks[:n_pos].sum() - n_pos * (n_pos + 1) / 2.0
    return float(u_statistic / (n_pos * n_neg))


def score_range(scored):
    values = [pair.score for pair in scored]
    if not values:
        raise MetricError('Cannot take the score range of an empty list.')
    return max(values), min(values)
