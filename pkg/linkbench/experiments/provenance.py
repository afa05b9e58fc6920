import io
import logging
import os

from rest_framework.renderers import JSONRenderer

from .serializers import ProvenanceSerializer

logger = logging.getLogger(__name__)

PROVENANCE_FILE = 'provenance.jsonl'


def record(config, command, graphs=()):
    serializer = ProvenanceSerializer(data={
        'command': command,
        'config_hash': config.hash,
        'seed': config.seed,
        'graphs': list(graphs),
    })
    serializer.is_valid(raise_exception=True)
    return serializer.data


def append_provenance(config, command, graphs=()):
    """Append one JSON line describing this run to `<out>/provenance.jsonl`."""
    os.makedirs(config.out, exist_ok=True)
    path = os.path.join(config.out, PROVENANCE_FILE)
    entry = record(config, command, graphs)
    with io.open(path, 'ab') as stream:
        stream.write(JSONRenderer().render(entry))
        stream.write(b'\n')
    logger.debug('Provenance appended to %s.', path)
    return entry
