from django.test import SimpleTestCase

from ...exceptions import SplitError
from ...graphs import Graph
from ...graphs.tests.factories import GraphFactory, complete_graph, path_graph
from ..folds import fold_rng, holdout_size, make_fold, make_splits, spanning_forest


class TestSpanningForest(SimpleTestCase):
    def test_forest_size(self):
        g = Graph([(0, 1), (1, 2), (0, 2), (3, 4)], node_count=6)
        forest = spanning_forest(g, fold_rng(0, 0))
        self.assertEqual(len(forest), 3)
        self.assertTrue(forest <= g.edge_set)
        self.assertEqual(Graph(forest, node_count=6).components[0], g.components[0])


class TestMakeSplits(SimpleTestCase):
    def test_complete_graph(self):
        bundle = make_fold(complete_graph(4), 0, test_fraction=0.1, with_negatives=False)
        self.assertEqual(len(bundle.test_pos), 1)
        self.assertEqual(bundle.train_graph.edge_count, 5)
        self.assertEqual(bundle.train_graph.components[0], 1)

    def test_tree(self):
        with self.assertRaises(SplitError) as context:
            make_splits(path_graph(12), folds=1)
        self.assertIn('short by 1', str(context.exception))

    def test_bad_fraction(self):
        with self.assertRaises(SplitError):
            make_splits(complete_graph(5), test_fraction=1.0)

    def test_holdout_arithmetic(self):
        self.assertEqual(holdout_size(11693, 0.1), 1169)
        self.assertEqual(holdout_size(6, 0.1), 1)
        self.assertEqual(holdout_size(4, 0.1), 0)

    def test_fold_invariants(self):
        g = GraphFactory.build(n=40, p=0.15, seed=6)
        components = g.components[0]
        for bundle in make_splits(g, folds=5, seed=3):
            self.assertEqual(len(bundle.test_pos), holdout_size(g.edge_count, 0.1))
            self.assertEqual(bundle.train_graph.edge_set | bundle.test_pos.members, g.edge_set)
            self.assertFalse(bundle.train_graph.edge_set & bundle.test_pos.members)
            self.assertEqual(bundle.train_graph.components[0], components)
            self.assertEqual(len(bundle.train_neg), len(bundle.train_pos))
            self.assertEqual(len(bundle.train_pos), bundle.train_graph.edge_count)
            self.assertEqual(len(bundle.test_neg), len(bundle.test_pos))
            self.assertFalse(bundle.train_neg.members & bundle.test_neg.members)
            for u, v in list(bundle.train_neg) + list(bundle.test_neg):
                self.assertFalse(g.has_edge(u, v))
            self.assertEqual(bundle.observed_graph().edge_set, g.edge_set)

    def test_deterministic(self):
        g = GraphFactory.build(n=30, p=0.2, seed=8)
        first = make_splits(g, folds=3, seed=5)
        second = make_splits(g, folds=3, seed=5)
        for a, b in zip(first, second):
            self.assertEqual(a.test_pos, b.test_pos)
            self.assertEqual(a.train_neg, b.train_neg)
            self.assertEqual(a.test_neg, b.test_neg)
            self.assertEqual(a.train_graph.edge_set, b.train_graph.edge_set)

    def test_folds_differ(self):
        g = GraphFactory.build(n=30, p=0.3, seed=8)
        folds = make_splits(g, folds=2, seed=5)
        self.assertNotEqual(folds[0].test_pos, folds[1].test_pos)
