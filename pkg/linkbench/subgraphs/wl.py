from dataclasses import dataclass

import numpy as np

DEFAULT_MAX_ITERS = 10


@dataclass(frozen=True)
class WlnmEncoding:
    labels: tuple
    order: tuple
    vector: np.ndarray
    iterations: int


def _rank(values):
    """Dense 1-based ranks of `values` in sorted order of the distinct values."""
    ranking = {value: i for i, value in enumerate(sorted(set(values)), start=1)}
    return [ranking[value] for value in values]


def initial_colors(sg):
    colors = []
    for du, dv in zip(sg.dist_u, sg.dist_v):
        colors.append((min(du, dv), max(du, dv)))
    return _rank(colors)


def refine(adjacency, colors, max_iters=DEFAULT_MAX_ITERS):
    """
    Colour refinement: each round a node's colour becomes the rank of
    (own colour, sorted neighbour colours). Ranking sorts by the old colour
    first, so the partition only ever splits and colour order is kept.

    Returns (colours, rounds run).
    """
    neighbours = [np.flatnonzero(row).tolist() for row in adjacency]
    rounds = 0
    for _ in range(max_iters):
        signatures = [
            (colors[i], tuple(sorted(colors[j] for j in neighbours[i])))
            for i in range(len(colors))
        ]
        refined = _rank(signatures)
        rounds += 1
        if len(set(refined)) == len(set(colors)):
            return refined, rounds
        colors = refined
    return colors, rounds


def upper_triangle(adjacency, order, size):
    """
    Upper-triangular entries of `adjacency` permuted by `order` and padded
    to `size` nodes, row by row, without the (0, 1) target entry.
    """
    padded = np.zeros((size, size), dtype=np.float64)
    n = len(order)
    padded[:n, :n] = adjacency[np.ix_(order, order)]
    rows, cols = np.triu_indices(size, k=1)
    return padded[rows, cols][1:]


def wl_label(sg, max_iters=DEFAULT_MAX_ITERS):
    start = initial_colors(sg)
    final, rounds = refine(sg.adjacency, start, max_iters=max_iters)
    order = sorted(range(sg.size), key=lambda i: (final[i], start[i], sg.nodes[i]))
    labels = [0] * sg.size
    for position, i in enumerate(order, start=1):
        labels[i] = position
    return WlnmEncoding(
        labels=tuple(labels),
        order=tuple(order),
        vector=upper_triangle(sg.adjacency, order, sg.padded_size),
        iterations=rounds,
    )
