import time

from ..heuristics import score_batch


def elapsed_ms(started):
    return (time.perf_counter() - started) * 1000.0


def time_heuristic(g, h, pairs, warm_up=True):
    """Mean milliseconds per link for scoring `pairs`, after one untimed pass."""
    pairs = list(pairs)
    if warm_up:
        score_batch(g, h, pairs)
    return score_batch(g, h, pairs).ms_per_link


def time_model(run):
    """Run the train-and-score closure `run` once; returns (result, total ms)."""
    started = time.perf_counter()
    result = run()
    return result, elapsed_ms(started)
