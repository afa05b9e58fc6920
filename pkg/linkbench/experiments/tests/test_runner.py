import io
import json
import os

from ...exceptions import ConfigError, DatasetMissingError, ManifestError
from .. import runner
from ..provenance import PROVENANCE_FILE
from .utils import ExperimentTestCase


class TestParseSelector(ExperimentTestCase):
    def test_all(self):
        approaches = runner.parse_selector('ALL', self.config())
        self.assertEqual(len(approaches), 15)
        self.assertEqual(approaches[-2:], ['WLNM', 'SEAL'])

    def test_lists(self):
        config = self.config()
        self.assertEqual(runner.parse_selector('cn, wlnm', config), ['CN', 'WLNM'])
        self.assertEqual(runner.parse_selector('SEAL-lite,GNN', config), ['SEAL', 'WLNM'])
        self.assertEqual(runner.parse_selector('HEURISTICS', config), config.heuristics)

    def test_unknown(self):
        with self.assertRaises(ConfigError):
            runner.parse_selector('CN,XYZ', self.config())


class TestStats(ExperimentTestCase):
    def test_writes_csv(self):
        rows = runner.cmd_stats(self.config())
        self.assertEqual([name for name, _ in rows], ['cave'])
        lines = self.read_output(runner.STATS_FILE).splitlines()
        self.assertTrue(lines[0].startswith('# linkbench '))
        self.assertEqual(lines[1], ','.join(runner.STATS_HEADER))
        self.assertTrue(lines[2].startswith('cave,24,64,'))
        self.assertTrue(lines[2].endswith(',small/medium'))

    def test_missing_dataset(self):
        with self.assertRaises(DatasetMissingError) as context:
            runner.cmd_stats(self.config(), graph='usair')
        self.assertIn(runner.FETCH_COMMAND, str(context.exception))

    def test_provenance(self):
        config = self.config()
        runner.cmd_stats(config)
        runner.cmd_split(config)
        with io.open(self.output(PROVENANCE_FILE), encoding='utf-8') as stream:
            entries = [json.loads(line) for line in stream]
        self.assertEqual([entry['command'] for entry in entries], ['stats', 'split'])
        self.assertEqual(entries[0]['config_hash'], config.hash)
        self.assertEqual(entries[1]['graphs'], ['cave'])


class TestSplit(ExperimentTestCase):
    def test_persists_folds(self):
        folds = runner.cmd_split(self.config())
        self.assertEqual(len(folds['cave']), 2)
        for index in range(2):
            self.assertTrue(os.path.isdir(self.output('splits', 'cave', 'fold_{}'.format(index))))

    def test_bench_reuses_folds(self):
        config = self.config()
        split = runner.cmd_split(config)['cave']
        loaded = runner.fold_set(config, 'cave', runner.load_dataset(config, 'cave'))
        self.assertEqual([list(f.test_pos) for f in loaded], [list(f.test_pos) for f in split])

    def test_fold_count_mismatch(self):
        runner.cmd_split(self.config())
        self.config_path = self.write_config(folds=3)
        with self.assertRaises(ManifestError):
            runner.cmd_bench(self.config(), approach='CN')

    def test_seed_mismatch(self):
        runner.cmd_split(self.config())
        self.config_path = self.write_config(seed=7)
        with self.assertRaises(ManifestError):
            runner.cmd_bench(self.config(), approach='CN')

    def test_test_fraction_mismatch(self):
        runner.cmd_split(self.config())
        self.config_path = self.write_config(test_fraction=0.3)
        with self.assertRaises(ManifestError):
            runner.fold_set(self.config(), 'cave', runner.load_dataset(self.config(), 'cave'))

    def test_resplit_after_seed_change(self):
        runner.cmd_split(self.config())
        self.config_path = self.write_config(seed=7)
        config = self.config()
        split = runner.cmd_split(config)['cave']
        loaded = runner.fold_set(config, 'cave', runner.load_dataset(config, 'cave'))
        self.assertEqual([fold.seed for fold in loaded], [7, 7])
        self.assertEqual([list(f.test_pos) for f in loaded], [list(f.test_pos) for f in split])


class TestBench(ExperimentTestCase):
    def test_all_approaches(self):
        report = runner.cmd_bench(self.config(), approach='ALL')
        first_fold = [row.approach for row in report.fold_rows() if row.fold == '0']
        self.assertEqual(len(first_fold), 15)
        self.assertEqual(first_fold[-2:], ['WLNM', 'SEAL-lite'])

    def test_heuristic_rows(self):
        report = runner.cmd_bench(self.config(), approach='CN,AA')
        self.assertEqual(len(report), 6)
        self.assertEqual([row.fold for row in report][-2:], ['mean', 'mean'])
        for row in report.fold_rows():
            self.assertIsNotNone(row.precision_thr)
            self.assertIsNone(row.time_ms)

    def test_byte_identical_reruns(self):
        runner.cmd_bench(self.config(), approach='CN')
        first = self.read_output(runner.METRICS_FILE)
        runner.cmd_bench(self.config(), approach='CN')
        self.assertEqual(self.read_output(runner.METRICS_FILE), first)

    def test_timing(self):
        report = runner.cmd_bench(self.config(timing=True), approach='PA')
        self.assertTrue(all(row.time_ms > 0 for row in report))

    def test_models(self):
        report = runner.cmd_bench(self.config(), approach='GNN')
        self.assertEqual([row.approach for row in report.fold_rows()], ['WLNM', 'SEAL-lite'] * 2)
        self.assertTrue(all(row.precision_thr is None for row in report))
        for index in range(2):
            for name in ('wlnm.npz', 'seal.npz'):
                self.assertTrue(os.path.exists(self.output('models', 'cave', 'fold_{}'.format(index), name)))


class TestReport(ExperimentTestCase):
    def test_needs_metrics(self):
        with self.assertRaises(DatasetMissingError):
            runner.cmd_report(self.config())

    def test_markdown(self):
        config = self.config()
        runner.cmd_bench(config, approach='CN,PA')
        markdown = runner.cmd_report(config)
        self.assertEqual(self.read_output(runner.REPORT_FILE), markdown + '\n')
        self.assertIn('## AUC', markdown)
        self.assertIn('| Approach | cave |', markdown)
        self.assertIn('config={}'.format(config.hash), markdown)
