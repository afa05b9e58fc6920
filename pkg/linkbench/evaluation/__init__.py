from .metrics import AucSampleSpec, auc_exact, auc_sampled, precision_at_L, precision_thresholded, score_range
from .reports import MEAN_FOLD, MetricsReport, MetricsRow
from .timing import time_heuristic, time_model

__all__ = [
    'MEAN_FOLD',
    'AucSampleSpec',
    'MetricsReport',
    'MetricsRow',
    'auc_exact',
    'auc_sampled',
    'precision_at_L',
    'precision_thresholded',
    'score_range',
    'time_heuristic',
    'time_model',
]
