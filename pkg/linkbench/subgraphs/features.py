from dataclasses import dataclass

import numpy as np

DEFAULT_LABEL_CAP = 10


@dataclass(frozen=True)
class FeatureLayout:
    """
    Column layout shared by every feature matrix of one experiment:
    [one-hot DRNL label (label_cap + 1) | latent (latent_width) | one-hot attribute].
    """
    label_cap: int = DEFAULT_LABEL_CAP
    latent_width: int = 0
    attribute_values: tuple = ()

    @classmethod
    def for_graph(cls, graph, label_cap=DEFAULT_LABEL_CAP, latent_width=0):
        values = ()
        if graph.attributes is not None:
            values = tuple(sorted({value for value in graph.attributes if value is not None}))
        return cls(label_cap=label_cap, latent_width=latent_width, attribute_values=values)

    @property
    def label_width(self):
        return self.label_cap + 1

    @property
    def attribute_width(self):
        return len(self.attribute_values)

    @property
    def width(self):
        return self.label_width + self.latent_width + self.attribute_width


@dataclass(frozen=True)
class FeatureMatrix:
    rows: np.ndarray
    layout: FeatureLayout


def build_feature_matrix(sg, labeling, layout, latent=None, attributes=None):
    """
    Node information matrix of `sg`. A missing latent table or attribute
    vector leaves its block zero but keeps its width.
    """
    rows = np.zeros((sg.size, layout.width))
    labels = np.minimum(np.asarray(labeling.labels, dtype=np.int64), layout.label_cap)
    rows[np.arange(sg.size), labels] = 1.0

    start = layout.label_width
    if latent is not None and layout.latent_width:
        rows[:, start:start + layout.latent_width] = latent.vectors[list(sg.nodes)]

    start += layout.latent_width
    if attributes is not None and layout.attribute_width:
        column = {value: i for i, value in enumerate(layout.attribute_values)}
        for i, node in enumerate(sg.nodes):
            value = attributes[node]
            if value in column:
                rows[i, start + column[value]] = 1.0
    return FeatureMatrix(rows=rows, layout=layout)


def dump_subgraph(sg, labeling, graph, stream):
    """Debug dump: one `node` line per node, then one `edge` line per link."""
    for i, node in enumerate(sg.nodes):
        stream.write('node {} {} {} {} {}\n'.format(
            i, graph.labels[node], _hop(sg.dist_u[i]), _hop(sg.dist_v[i]), labeling.labels[i]))
    rows, cols = np.nonzero(np.triu(sg.adjacency, k=1))
    for i, j in zip(rows.tolist(), cols.tolist()):
        stream.write('edge {} {}\n'.format(i, j))


def _hop(distance):
    return 'inf' if np.isinf(distance) else str(int(distance))
