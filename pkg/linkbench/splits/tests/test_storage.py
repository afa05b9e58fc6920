import os
import shutil
import tempfile

from django.test import SimpleTestCase

from ...exceptions import ManifestError
from ...graphs.tests.factories import GraphFactory
from .. import storage
from ..folds import make_splits


class TestSplitStorage(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.directory)
        self.graph = GraphFactory.build(n=30, p=0.2, seed=12)
        self.bundles = make_splits(self.graph, folds=2, seed=4)

    def test_round_trip(self):
        storage.save_splits(self.bundles, self.directory, self.graph, config_hash='abc')
        loaded = storage.load_splits(self.directory, self.graph)
        self.assertEqual(len(loaded), 2)
        for original, restored in zip(self.bundles, loaded):
            self.assertEqual(restored.fold_index, original.fold_index)
            self.assertEqual(restored.seed, 4)
            for attribute in ('train_pos', 'train_neg', 'test_pos', 'test_neg'):
                self.assertEqual(getattr(restored, attribute), getattr(original, attribute))
            self.assertEqual(restored.train_graph.edge_set, original.train_graph.edge_set)

    def test_layout(self):
        storage.save_splits(self.bundles, self.directory, self.graph)
        names = sorted(os.listdir(storage.fold_directory(self.directory, 0)))
        self.assertEqual(names, ['manifest.json', 'test_neg.txt', 'test_pos.txt', 'train_edges.txt', 'train_neg.txt'])
        manifest = storage.read_json(os.path.join(storage.fold_directory(self.directory, 1), storage.MANIFEST))
        self.assertEqual(manifest['fold_index'], 1)
        self.assertEqual(manifest['graph_checksum'], self.graph.checksum())

    def test_other_graph(self):
        storage.save_splits(self.bundles, self.directory, self.graph)
        with self.assertRaises(ManifestError):
            storage.load_splits(self.directory, GraphFactory.build(n=30, p=0.2, seed=13))

    def test_missing(self):
        with self.assertRaises(ManifestError):
            storage.load_splits(self.directory, self.graph)

    def test_corrupt_manifest(self):
        storage.save_splits(self.bundles[:1], self.directory, self.graph)
        path = os.path.join(storage.fold_directory(self.directory, 0), storage.MANIFEST)
        storage.write_json(path, {'fold_index': -1})
        with self.assertRaises(ManifestError):
            storage.load_splits(self.directory, self.graph)

    def test_expected_seed(self):
        storage.save_splits(self.bundles, self.directory, self.graph)
        self.assertEqual(len(storage.load_splits(self.directory, self.graph, seed=4, test_fraction=0.1)), 2)
        with self.assertRaises(ManifestError):
            storage.load_splits(self.directory, self.graph, seed=7)

    def test_expected_test_fraction(self):
        storage.save_splits(self.bundles, self.directory, self.graph)
        with self.assertRaises(ManifestError):
            storage.load_splits(self.directory, self.graph, test_fraction=0.3)
