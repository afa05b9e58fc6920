import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DrnlLabeling:
    labels: tuple
    dist_u: np.ndarray
    dist_v: np.ndarray


def drnl_label(du, dv):
    """
    Double-radius label of a non-target node at hop distances (du, dv).
    Symmetric in its arguments; 0 when either distance is infinite.
    """
    if math.isinf(du) or math.isinf(dv):
        return 0
    du, dv = int(du), int(dv)
    d = du + dv
    half, odd = divmod(d, 2)
    return 1 + min(du, dv) + half * (half + odd - 1)


def drnl(sg):
    labels = [drnl_label(du, dv) for du, dv in zip(sg.dist_u, sg.dist_v)]
    labels[0] = labels[1] = 1
    return DrnlLabeling(labels=tuple(labels), dist_u=sg.dist_u, dist_v=sg.dist_v)
