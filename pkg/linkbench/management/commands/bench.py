import os

from ._base import LinkBenchCommand
from ...experiments import cmd_bench
from ...experiments.runner import METRICS_FILE


class Command(LinkBenchCommand):
    help = 'Benchmark heuristics and GNN predictors on the persisted folds.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument(
            '--approach', default='ALL',
            help='ALL, HEURISTICS, GNN or a comma list of approach tags (CN,AA,WLNM,SEAL,...).')

    def run(self, config, options):
        report = cmd_bench(config, approach=options['approach'], graph=options.get('graph'))
        self.stdout.write('{} rows written to {}'.format(len(report), os.path.join(config.out, METRICS_FILE)))
