import copy
import hashlib
import io
import json
import logging
import os
from dataclasses import dataclass

from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser

from ..conf import project_defaults
from ..exceptions import ConfigError
from ..nn import TrainConfig
from .serializers import ExperimentConfigSerializer

logger = logging.getLogger(__name__)


def merge(base, override):
    """Recursive dict merge; `override` wins and neither input is modified."""
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def _flatten_errors(errors, prefix=''):
    if isinstance(errors, dict):
        for key, value in errors.items():
            for item in _flatten_errors(value, '{}{}.'.format(prefix, key)):
                yield item
    elif isinstance(errors, list):
        for index, value in enumerate(errors):
            if isinstance(value, (dict, list)) and value:
                nested = prefix if isinstance(value, list) else '{}{}.'.format(prefix, index)
                for item in _flatten_errors(value, nested):
                    yield item
            elif value:
                yield '{}: {}'.format(prefix.rstrip('.'), value)


@dataclass(frozen=True)
class ExperimentConfig:
    """Validated experiment configuration; `data` is the canonical dict form."""
    data: dict

    def __getattr__(self, name):
        try:
            return self.__dict__['data'][name]
        except KeyError:
            raise AttributeError(name)

    @property
    def hash(self):
        canonical = json.dumps(self.data, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()

    def train_config(self, fold_index=0):
        train = self.data['train']
        return TrainConfig(
            optimizer=train['optimizer'],
            learning_rate=train['learning_rate'],
            epochs=train['epochs'],
            batch_size=train['batch_size'],
            activation=train['activation'],
            seed=self.data['seed'] + fold_index,
        )

    def dataset(self, name):
        """The configured dataset `name`, or `<data_dir>/<name>.txt` in pairs format."""
        for dataset in self.data['datasets']:
            if dataset['name'] == name:
                return dataset
        return {'name': name, 'path': '', 'format': 'pairs', 'attributes': ''}

    def dataset_path(self, dataset):
        return dataset['path'] or os.path.join(self.data['data_dir'], '{}.txt'.format(dataset['name']))


def read_config_file(path):
    try:
        with io.open(path, 'rb') as stream:
            data = JSONParser().parse(stream)
    except (IOError, OSError) as e:
        raise ConfigError('Cannot read config file {}: {}'.format(path, e))
    except ParseError as e:
        raise ConfigError('Config file {} is not valid JSON: {}'.format(path, e.detail))
    if not isinstance(data, dict):
        raise ConfigError('Config file {} must hold a JSON object.'.format(path))
    return data


def build_config(data):
    serializer = ExperimentConfigSerializer(data=data)
    if not serializer.is_valid():
        raise ConfigError('Invalid configuration: {}'.format('; '.join(_flatten_errors(serializer.errors))))
    # Round-trip through JSON so the canonical form holds plain types only.
    return ExperimentConfig(data=json.loads(json.dumps(serializer.validated_data)))


def load_config(path=None, overrides=None):
    """
    Built-in defaults, then the LINKBENCH setting, then the config file at
    `path`, then `overrides` (command-line flags).
    """
    data = project_defaults()
    if path:
        data = merge(data, read_config_file(path))
    data = merge(data, overrides or {})
    config = build_config(data)
    logger.debug('Configuration %s: %s', config.hash[:12], config.data)
    return config
