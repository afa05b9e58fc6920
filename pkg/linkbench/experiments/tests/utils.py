import io
import json
import os
import shutil
import tempfile

from django.test import SimpleTestCase

from ...graphs.tests.factories import caveman_graph
from ..config import load_config

# Small enough that a full bench, models included, runs in seconds.
TINY = {
    'datasets': [{'name': 'cave'}],
    'folds': 2,
    'wlnm': {'k': 5, 'hidden': [8]},
    'seal': {'d_lat': 2, 'k_sp': 5, 'hidden': 4, 'layers': 1, 'head_hidden': 4},
    'train': {'epochs': 2, 'learning_rate': 0.01},
}


class ExperimentTestCase(SimpleTestCase):
    """A temporary data directory holding `cave.txt` and a matching config file."""
    graph = caveman_graph(4, 6)

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.directory)
        self.data_dir = os.path.join(self.directory, 'data')
        self.out = os.path.join(self.directory, 'results')
        os.makedirs(self.data_dir)
        with io.open(os.path.join(self.data_dir, 'cave.txt'), 'w', encoding='utf-8') as stream:
            for u, v in self.graph.edges():
                stream.write('{} {}\n'.format(u, v))
        self.config_path = self.write_config()

    def write_config(self, **changes):
        data = dict(TINY, data_dir=self.data_dir, out=self.out, **changes)
        path = os.path.join(self.directory, 'config.json')
        with io.open(path, 'w', encoding='utf-8') as stream:
            json.dump(data, stream)
        return path

    def config(self, **overrides):
        return load_config(self.config_path, overrides)

    def output(self, *parts):
        return os.path.join(self.out, *parts)

    def read_output(self, *parts):
        with io.open(self.output(*parts), encoding='utf-8') as stream:
            return stream.read()
