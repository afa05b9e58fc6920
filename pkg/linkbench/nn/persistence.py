"""
Versioned model files.

A model file is an uncompressed `.npz` archive holding every parameter array
in `parameters()` order, the fixed arrays from `buffers()` and a `meta`
entry: UTF-8 JSON with the format version, the model kind, its layer shapes,
its TrainConfig and the caller's manifest. Arrays keep their float64 bytes,
so a save/load round trip is exact.
"""
import io
import logging

import numpy as np
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from ..exceptions import ModelStateError

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
META_KEY = 'meta'
PARAM_KEY = 'param_{}'
BUFFER_KEY = 'buffer_{}'

MODEL_KINDS = {}


def register(kind):
    """Class decorator making `kind` loadable by `load_model`."""
    def decorator(cls):
        MODEL_KINDS[kind] = cls
        cls.kind = kind
        return cls
    return decorator


def _encode_meta(meta):
    return np.frombuffer(JSONRenderer().render(meta), dtype=np.uint8)


def _decode_meta(array):
    return JSONParser().parse(io.BytesIO(array.tobytes()))


def save_model(path, model, manifest=None):
    meta = {
        'format_version': FORMAT_VERSION,
        'kind': model.kind,
        'state': model.state(),
        'manifest': manifest or {},
    }
    arrays = {PARAM_KEY.format(i): array for i, array in enumerate(model.parameters())}
    arrays.update((BUFFER_KEY.format(i), array) for i, array in enumerate(model.buffers()))
    arrays[META_KEY] = _encode_meta(meta)
    with io.open(path, 'wb') as stream:
        np.savez(stream, **arrays)
    logger.info('Saved %s model to %s.', model.kind, path)


def _numbered(archive, template):
    arrays = []
    while template.format(len(arrays)) in archive.files:
        arrays.append(archive[template.format(len(arrays))])
    return arrays


def load_model(path):
    """Return (model, manifest) from a file written by `save_model`."""
    try:
        archive = np.load(path, allow_pickle=False)
    except (IOError, OSError, ValueError) as e:
        raise ModelStateError('Cannot read model file {}: {}'.format(path, e))
    with archive:
        if META_KEY not in archive.files:
            raise ModelStateError('{} is not a linkbench model file.'.format(path))
        meta = _decode_meta(archive[META_KEY])
        if meta.get('format_version') != FORMAT_VERSION:
            raise ModelStateError('Unsupported model format version {!r} in {}.'.format(
                meta.get('format_version'), path))
        try:
            cls = MODEL_KINDS[meta['kind']]
        except KeyError:
            raise ModelStateError('Unknown model kind {!r} in {}.'.format(meta.get('kind'), path))
        parameters = _numbered(archive, PARAM_KEY)
        buffers = _numbered(archive, BUFFER_KEY)
    return cls.from_state(meta['state'], parameters, buffers), meta['manifest']
