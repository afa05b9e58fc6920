import sys

from django.core.management import execute_from_command_line

from .conf import configure


def main(argv=None):
    """Console entry point: `linkbench stats|split|bench|report [flags]`."""
    argv = list(sys.argv if argv is None else argv)
    configure()
    execute_from_command_line(['linkbench'] + argv[1:])


if __name__ == '__main__':
    main()
