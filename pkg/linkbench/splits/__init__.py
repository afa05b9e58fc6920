from .folds import DEFAULT_FOLDS, DEFAULT_TEST_FRACTION, SplitBundle, make_fold, make_splits, spanning_forest
from .pairs import PairSet, Polarity
from .sampling import sample_negatives

__all__ = [
    'DEFAULT_FOLDS',
    'DEFAULT_TEST_FRACTION',
    'PairSet',
    'Polarity',
    'SplitBundle',
    'make_fold',
    'make_splits',
    'sample_negatives',
    'spanning_forest',
]
