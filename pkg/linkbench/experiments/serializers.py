from django.utils import timezone
from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from .. import __version__
from ..graphs import FORMATS, PAIRS
from ..heuristics import HeuristicId
from ..nn.layers import ACTIVATIONS
from ..nn.optim import ADAM, OPTIMIZERS
from ..predictors import GNN_GRAPHS, TRAIN_GRAPH


class DatasetSerializer(serializers.Serializer):
    name = serializers.RegexField(r'^[A-Za-z0-9_.-]+$')
    path = serializers.CharField(required=False, allow_blank=True, default='')
    format = serializers.ChoiceField(choices=FORMATS, default=PAIRS)
    attributes = serializers.CharField(required=False, allow_blank=True, default='')


class WlnmSerializer(serializers.Serializer):
    k = serializers.IntegerField(default=10, min_value=3)
    hidden = serializers.ListField(
        child=serializers.IntegerField(min_value=1), default=[32, 32, 16])


class SealSerializer(serializers.Serializer):
    h = serializers.IntegerField(default=1, min_value=1)
    d_lat = serializers.IntegerField(default=16, min_value=1)
    k_sp = serializers.IntegerField(default=30, min_value=1)
    layers = serializers.IntegerField(default=3, min_value=1)
    hidden = serializers.IntegerField(default=32, min_value=1)
    head_hidden = serializers.IntegerField(default=32, min_value=1)
    label_cap = serializers.IntegerField(default=10, min_value=1)
    latent_iters = serializers.IntegerField(default=50, min_value=1)


class TrainSerializer(serializers.Serializer):
    optimizer = serializers.ChoiceField(choices=OPTIMIZERS, default=ADAM)
    learning_rate = serializers.FloatField(default=1e-3)
    epochs = serializers.IntegerField(default=50, min_value=1)
    batch_size = serializers.IntegerField(default=32, min_value=1)
    activation = serializers.ChoiceField(choices=sorted(ACTIVATIONS), default='relu')

    def validate_learning_rate(self, value):
        if not value > 0:
            raise serializers.ValidationError(_('Must be positive.'))
        return value


class AucSerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=1, allow_null=True, default=None)


class ExperimentConfigSerializer(serializers.Serializer):
    NESTED = ('wlnm', 'seal', 'train', 'auc')

    datasets = DatasetSerializer(many=True, default=list)
    data_dir = serializers.CharField(default='data')
    seed = serializers.IntegerField(default=0, min_value=0)
    folds = serializers.IntegerField(default=5, min_value=1)
    test_fraction = serializers.FloatField(default=0.1)
    heuristics = serializers.ListField(
        child=serializers.CharField(), default=[h.value for h in HeuristicId])
    wlnm = WlnmSerializer()
    seal = SealSerializer()
    train = TrainSerializer()
    auc = AucSerializer()
    out = serializers.CharField(default='results')
    timing = serializers.BooleanField(default=False)
    gnn_graph = serializers.ChoiceField(choices=GNN_GRAPHS, default=TRAIN_GRAPH)

    def to_internal_value(self, data):
        # Omitted sections still get their field defaults.
        data = dict(data)
        for name in self.NESTED:
            if data.get(name) is None:
                data[name] = {}
        return super(ExperimentConfigSerializer, self).to_internal_value(data)

    def validate_test_fraction(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError(_('Must lie strictly between 0 and 1.'))
        return value

    def validate_heuristics(self, value):
        parsed = []
        for tag in value:
            try:
                heuristic = HeuristicId.parse(tag).value
            except ValueError:
                raise serializers.ValidationError(_('Unknown heuristic {}.').format(tag))
            if heuristic not in parsed:
                parsed.append(heuristic)
        if not parsed:
            raise serializers.ValidationError(_('Name at least one heuristic.'))
        return parsed

    def validate(self, attrs):
        names = [dataset['name'] for dataset in attrs['datasets']]
        if len(names) != len(set(names)):
            raise serializers.ValidationError(_('Dataset names must be unique.'))
        return attrs


class ProvenanceSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=('stats', 'split', 'bench', 'report'))
    config_hash = serializers.RegexField(r'^[0-9a-f]{64}$')
    seed = serializers.IntegerField(min_value=0)
    toolkit_version = serializers.CharField(default=__version__)
    graphs = serializers.ListField(child=serializers.CharField(), default=list)
    created = serializers.DateTimeField(default=timezone.now)
