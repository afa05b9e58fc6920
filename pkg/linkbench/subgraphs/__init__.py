from .drnl import DrnlLabeling, drnl, drnl_label
from .extraction import EnclosingSubgraph, extract_h_subgraph, extract_k_subgraph
from .features import FeatureLayout, FeatureMatrix, build_feature_matrix, dump_subgraph
from .latent import LatentTable, latent_features
from .wl import WlnmEncoding, wl_label

__all__ = [
    'DrnlLabeling',
    'EnclosingSubgraph',
    'FeatureLayout',
    'FeatureMatrix',
    'LatentTable',
    'WlnmEncoding',
    'build_feature_matrix',
    'drnl',
    'drnl_label',
    'dump_subgraph',
    'extract_h_subgraph',
    'extract_k_subgraph',
    'latent_features',
    'wl_label',
]
