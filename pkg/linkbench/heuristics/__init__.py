from .batch import BatchScores, score_batch, score_pairs, write_scores_csv
from .scores import SCORERS, HeuristicId, ScoredPair, common_neighbourhood, score

__all__ = [
    'SCORERS',
    'BatchScores',
    'HeuristicId',
    'ScoredPair',
    'common_neighbourhood',
    'score',
    'score_batch',
    'score_pairs',
    'write_scores_csv',
]
