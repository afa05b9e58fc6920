import enum
import math
from dataclasses import dataclass
from typing import Optional

from ..exceptions import InvalidNodeError


class HeuristicId(enum.Enum):
    AA = 'AA'
    CN = 'CN'
    RA = 'RA'
    PA = 'PA'
    JA = 'JA'
    SA = 'SA'
    SO = 'SO'
    HPI = 'HPI'
    HDI = 'HDI'
    LLHN = 'LLHN'
    IA = 'IA'
    CAR = 'CAR'
    CCLP = 'CCLP'

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, tag):
        try:
            return cls[str(tag).strip().upper()]
        except KeyError:
            raise ValueError('Unknown heuristic {!r}.'.format(tag))


@dataclass(frozen=True)
class ScoredPair:
    u: int
    v: int
    score: float
    truth: Optional[object] = None

    @property
    def is_positive(self):
        return getattr(self.truth, 'value', self.truth) == 'positive'


def _ratio(numerator, denominator):
    # Degenerate denominators (isolated endpoints) score 0.
    if denominator == 0:
        return 0.0
    return numerator / denominator


def adamic_adar(g, u, v, common):
    total = 0.0
    for z in common:
        degree = g.degree(z)
        if degree > 1:
            total += 1.0 / math.log(degree)
    return total


def common_neighbours(g, u, v, common):
    return float(len(common))


def resource_allocation(g, u, v, common):
    return sum(1.0 / g.degree(z) for z in common)


def preferential_attachment(g, u, v, common):
    return float(g.degree(u) * g.degree(v))


def jaccard(g, u, v, common):
    union = g.degree(u) + g.degree(v) - len(common)
    return _ratio(len(common), union)


def salton(g, u, v, common):
    return _ratio(len(common), math.sqrt(g.degree(u) * g.degree(v)))


def sorensen(g, u, v, common):
    return _ratio(2.0 * len(common), g.degree(u) + g.degree(v))


def hub_promoted(g, u, v, common):
    return _ratio(len(common), max(g.degree(u), g.degree(v)))


def hub_depressed(g, u, v, common):
    return _ratio(len(common), min(g.degree(u), g.degree(v)))


def local_leicht_holme_newman(g, u, v, common):
    return _ratio(len(common), g.degree(u) * g.degree(v))


def individual_attraction(g, u, v, common):
    members = frozenset(common)
    total = 0.0
    for z in common:
        # Links from z to the other common neighbours.
        links = len(g.neighbor_set(z) & members)
        total += (links + 2.0) / g.degree(z)
    return total


def cannistraci_alanis_ravasi(g, u, v, common):
    members = frozenset(common)
    return sum(1.0 + len(g.neighbor_set(z) & members) / 2.0 for z in common)


def clustering_coefficient_link_prediction(g, u, v, common):
    coefficients = g.clustering_coefficients
    return float(sum(coefficients[z] for z in common))


SCORERS = {
    HeuristicId.AA: adamic_adar,
    HeuristicId.CN: common_neighbours,
    HeuristicId.RA: resource_allocation,
    HeuristicId.PA: preferential_attachment,
    HeuristicId.JA: jaccard,
    HeuristicId.SA: salton,
    HeuristicId.SO: sorensen,
    HeuristicId.HPI: hub_promoted,
    HeuristicId.HDI: hub_depressed,
    HeuristicId.LLHN: local_leicht_holme_newman,
    HeuristicId.IA: individual_attraction,
    HeuristicId.CAR: cannistraci_alanis_ravasi,
    HeuristicId.CCLP: clustering_coefficient_link_prediction,
}


def common_neighbourhood(g, u, v):
    g.check_node(u)
    g.check_node(v)
    if u == v:
        raise InvalidNodeError('Cannot score the self-pair ({0}, {0}).'.format(u))
    return tuple(sorted(g.neighbor_set(u) & g.neighbor_set(v)))


def score(g, h, u, v):
    h = HeuristicId(h)
    return SCORERS[h](g, u, v, common_neighbourhood(g, u, v))
