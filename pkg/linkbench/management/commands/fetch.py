import logging

from ._base import LinkBenchCommand
from ...conf import LOGGER_NAME, VERBOSITY_LEVELS
from ...graphs.datasets import GRAPHS, fetch_datasets


class Command(LinkBenchCommand):
    help = 'Fetch the benchmark .mat graphs and convert them to edge lists.'

    def add_arguments(self, parser):
        parser.add_argument('--source', required=True, help='Directory or base URL holding <Name>.mat files.')
        parser.add_argument('--out', default='data', help='Directory for the converted edge lists.')
        parser.add_argument('graphs', nargs='*', default=list(GRAPHS), help='Graph names (default: all).')

    def handle(self, *args, **options):
        logging.getLogger(LOGGER_NAME).setLevel(VERBOSITY_LEVELS.get(options['verbosity'], 'DEBUG'))
        for name, links in fetch_datasets(options['source'], options['out'], options['graphs']):
            self.stdout.write('{}: {} links'.format(name, links))
