import logging
import sys

from django.core.management.base import BaseCommand, CommandError

from ...conf import LOGGER_NAME, VERBOSITY_LEVELS
from ...exceptions import EXIT_USAGE, LinkBenchError
from ...experiments import load_config


class LinkBenchCommand(BaseCommand):
    """
    Shared flags and error handling. Library errors become a one-line
    CommandError carrying the error's exit code; bad arguments exit with 1.
    """
    requires_system_checks = []
    uses_graph = True

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super(LinkBenchCommand, self).create_parser(prog_name, subcommand, **kwargs)
        parser.called_from_command_line = False
        return parser

    def run_from_argv(self, argv):
        try:
            super(LinkBenchCommand, self).run_from_argv(argv)
        except CommandError as e:
            # Raised by the parser before `execute` could handle it.
            self.stderr.write('{}: {}'.format(argv[1] if len(argv) > 1 else 'linkbench', e))
            sys.exit(EXIT_USAGE)

    def add_arguments(self, parser):
        parser.add_argument('--config', help='JSON experiment config file.')
        parser.add_argument('--seed', type=int, help='Override the config seed.')
        parser.add_argument('--out', help='Override the output directory.')
        if self.uses_graph:
            parser.add_argument('--graph', help='Run on this dataset only.')

    def overrides(self, options):
        overrides = {}
        if options.get('seed') is not None:
            overrides['seed'] = options['seed']
        if options.get('out'):
            overrides['out'] = options['out']
        return overrides

    def execute(self, *args, **options):
        try:
            return super(LinkBenchCommand, self).execute(*args, **options)
        except LinkBenchError as e:
            raise CommandError(str(e), returncode=e.exit_code)

    def handle(self, *args, **options):
        level = VERBOSITY_LEVELS.get(options['verbosity'], 'DEBUG')
        logging.getLogger(LOGGER_NAME).setLevel(level)
        config = load_config(options.get('config'), self.overrides(options))
        return self.run(config, options)

    def run(self, config, options):
        raise NotImplementedError
