import io
import os

from django.core.management import call_command
from django.core.management.base import CommandError
import mock

from ... import cli
from ...exceptions import EXIT_DATA, EXIT_USAGE
from ...management.commands import bench, stats
from ..runner import METRICS_FILE, REPORT_FILE
from .utils import ExperimentTestCase


class TestCommands(ExperimentTestCase):
    def call(self, name, **options):
        stdout = io.StringIO()
        call_command(name, config=self.config_path, verbosity=0, stdout=stdout, **options)
        return stdout.getvalue()

    def test_stats(self):
        output = self.call('stats', no_paths=True)
        self.assertIn('cave: 24 nodes, 64 links', output)

    def test_split(self):
        output = self.call('split', graph='cave')
        self.assertIn('cave: 2 folds', output)

    def test_bench_and_report(self):
        self.call('bench', approach='CN')
        self.assertTrue(os.path.exists(self.output(METRICS_FILE)))
        output = self.call('report')
        self.assertIn('| CN |', output)
        self.assertTrue(os.path.exists(self.output(REPORT_FILE)))

    def test_seed_and_out_flags(self):
        other = os.path.join(self.directory, 'other')
        self.call('split', seed=3, out=other)
        self.assertTrue(os.path.isdir(os.path.join(other, 'splits', 'cave', 'fold_0')))

    def test_missing_dataset_exit_code(self):
        with self.assertRaises(CommandError) as context:
            self.call('stats', graph='usair')
        self.assertEqual(context.exception.returncode, EXIT_DATA)

    def test_bad_approach_exit_code(self):
        with self.assertRaises(CommandError) as context:
            self.call('bench', approach='XYZ')
        self.assertEqual(context.exception.returncode, EXIT_USAGE)

    def test_invalid_config_exit_code(self):
        self.config_path = self.write_config(folds=0)
        with self.assertRaises(CommandError) as context:
            self.call('split')
        self.assertEqual(context.exception.returncode, EXIT_USAGE)


class TestCommandLine(ExperimentTestCase):
    def run_argv(self, command, *argv):
        stderr = io.StringIO()
        with self.assertRaises(SystemExit) as context:
            command(stdout=io.StringIO(), stderr=stderr).run_from_argv(['linkbench'] + list(argv))
        return context.exception.code, stderr.getvalue()

    def test_unknown_flag(self):
        code, _ = self.run_argv(bench.Command, 'bench', '--bogus')
        self.assertEqual(code, EXIT_USAGE)

    def test_data_error(self):
        code, message = self.run_argv(
            stats.Command, 'stats', '--config', self.config_path, '--graph', 'usair', '--verbosity', '0')
        self.assertEqual(code, EXIT_DATA)
        self.assertIn('usair', message)

    def test_console_entry_point(self):
        with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout:
            cli.main(['linkbench', 'stats', '--config', self.config_path, '--no-paths', '--verbosity', '0'])
        self.assertIn('cave: 24 nodes, 64 links', stdout.getvalue())
