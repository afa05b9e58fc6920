import csv
import io
import os
import shutil
import tempfile

from django.test import SimpleTestCase
from mock import patch

from ...graphs.tests.factories import ToyGraphFactory
from ...splits import PairSet, Polarity
from .. import batch
from ..scores import score


class TestScoreBatch(SimpleTestCase):
    def setUp(self):
        self.g = ToyGraphFactory.build()
        n = self.g.node_of
        self.non_edges = PairSet(
            [(n('a'), n('b')), (n('a'), n('e')), (n('b'), n('e')), (n('d'), n('e'))], Polarity.NEGATIVE)

    def test_toy_non_edges(self):
        result = batch.score_batch(self.g, 'CN', self.non_edges)
        self.assertEqual([pair.score for pair in result.scores], [2.0, 1.0, 1.0, 1.0])
        self.assertTrue(all(pair.truth is Polarity.NEGATIVE for pair in result.scores))
        self.assertFalse(any(pair.is_positive for pair in result.scores))

    def test_single_pair(self):
        result = batch.score_batch(self.g, 'AA', [(0, 1)])
        self.assertEqual(result.scores[0].score, score(self.g, 'AA', 0, 1))
        self.assertIsNone(result.scores[0].truth)

    def test_empty(self):
        result = batch.score_batch(self.g, 'CN', [])
        self.assertEqual(result.scores, [])
        self.assertIsNone(result.ms_per_link)

    def test_timing(self):
        with patch.object(batch.time, 'perf_counter', side_effect=[1.0, 1.004]):
            result = batch.score_batch(self.g, 'CN', self.non_edges)
        self.assertAlmostEqual(result.ms_per_link, 1.0)


class TestWriteScores(SimpleTestCase):
    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.addCleanup(shutil.rmtree, self.directory)

    def test_csv(self):
        g = ToyGraphFactory.build()
        scored = batch.score_pairs(g, 'CN', PairSet([(0, 1)], Polarity.NEGATIVE))
        path = os.path.join(self.directory, 'scores.csv')
        batch.write_scores_csv(path, g, 'CN', scored)
        with io.open(path, newline='') as stream:
            rows = list(csv.reader(stream))
        self.assertEqual(rows, [['u', 'v', 'heuristic', 'score', 'truth'], ['a', 'b', 'CN', '2.0', 'negative']])
