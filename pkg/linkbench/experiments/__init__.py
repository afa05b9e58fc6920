from .config import ExperimentConfig, build_config, load_config
from .provenance import append_provenance
from .runner import cmd_bench, cmd_report, cmd_split, cmd_stats, parse_selector

__all__ = [
    'ExperimentConfig',
    'append_provenance',
    'build_config',
    'cmd_bench',
    'cmd_report',
    'cmd_split',
    'cmd_stats',
    'load_config',
    'parse_selector',
]
