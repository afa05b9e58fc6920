import enum

from ..exceptions import SamplingError
from ..graphs import canonical_pair


class Polarity(enum.Enum):
    POSITIVE = 'positive'
    NEGATIVE = 'negative'

    def __str__(self):
        return self.value


class PairSet(object):
    """
    Ordered, duplicate-free collection of unordered node pairs of one polarity.

    Pairs are stored canonically (smaller id first) in the order given.
    """
    def __init__(self, pairs, polarity):
        canonical = []
        seen = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise SamplingError('Self-pair ({0}, {0}) is not allowed.'.format(u))
            pair = canonical_pair(u, v)
            if pair in seen:
                raise SamplingError('Duplicate pair {}.'.format(pair))
            seen.add(pair)
            canonical.append(pair)
        self.pairs = tuple(canonical)
        self.polarity = Polarity(polarity)
        self._members = frozenset(seen)

    def __repr__(self):
        return '<PairSet {} n={}>'.format(self.polarity.value, len(self.pairs))

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair):
        return canonical_pair(*pair) in self._members

    def __eq__(self, other):
        if not isinstance(other, PairSet):
            return NotImplemented
        return self.pairs == other.pairs and self.polarity == other.polarity

    def __hash__(self):
        return hash((self.pairs, self.polarity))

    @property
    def members(self):
        return self._members

    @property
    def is_positive(self):
        return self.polarity is Polarity.POSITIVE
