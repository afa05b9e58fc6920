from ._base import LinkBenchCommand
from ...experiments import cmd_split


class Command(LinkBenchCommand):
    help = 'Make and persist the train/test folds of the configured graphs.'

    def run(self, config, options):
        for name, bundles in cmd_split(config, graph=options.get('graph')).items():
            self.stdout.write('{}: {} folds, {} test links each'.format(name, len(bundles), len(bundles[0].test_pos)))
