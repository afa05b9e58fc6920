from ._base import LinkBenchCommand
from ...experiments import cmd_report


class Command(LinkBenchCommand):
    help = 'Render the benchmark metrics as a Markdown summary.'
    uses_graph = False

    def run(self, config, options):
        self.stdout.write(cmd_report(config))
