EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RUNTIME = 3


class LinkBenchError(Exception):
    """Base class for every error raised by linkbench."""
    exit_code = EXIT_RUNTIME


class DataError(LinkBenchError):
    exit_code = EXIT_DATA


class GraphFormatError(DataError):
    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = 'line {}: {}'.format(line_number, message)
        super(GraphFormatError, self).__init__(message)
        self.line_number = line_number


class EmptyGraphError(DataError):
    pass


class DatasetMissingError(DataError):
    pass


class ManifestError(DataError):
    pass


class ConfigError(LinkBenchError):
    exit_code = EXIT_USAGE


class InvalidNodeError(LinkBenchError, ValueError):
    pass


class SplitError(LinkBenchError):
    pass


class SamplingError(LinkBenchError):
    pass


class ShapeError(LinkBenchError, ValueError):
    pass


class TrainingError(LinkBenchError):
    def __init__(self, message, epoch=None):
        super(TrainingError, self).__init__(message)
        self.epoch = epoch


class ModelStateError(LinkBenchError):
    pass


class MetricError(LinkBenchError, ValueError):
    pass
