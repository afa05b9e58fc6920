from ._base import LinkBenchCommand
from ...experiments import cmd_stats


class Command(LinkBenchCommand):
    help = 'Topological statistics of the configured graphs.'

    def add_arguments(self, parser):
        super(Command, self).add_arguments(parser)
        parser.add_argument('--no-paths', action='store_true', help='Skip path length and diameter.')

    def run(self, config, options):
        for name, summary in cmd_stats(config, graph=options.get('graph'), with_paths=not options['no_paths']):
            self.stdout.write('{}: {} nodes, {} links, avg degree {:.3f}, {} triangles, avg clustering {:.3f}'.format(
                name, summary.nodes, summary.links, summary.avg_degree, summary.triangles, summary.avg_clustering))
