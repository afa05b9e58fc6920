from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from .. import __version__
from ..nn.persistence import FORMAT_VERSION


class ModelManifestSerializer(serializers.Serializer):
    """Binds a trained model to the fold it was trained on."""
    version = serializers.IntegerField(default=FORMAT_VERSION)
    toolkit_version = serializers.CharField(default=__version__)
    approach = serializers.CharField()
    graph_checksum = serializers.RegexField(r'^[0-9a-f]{64}$')
    fold_index = serializers.IntegerField(min_value=0)
    seed = serializers.IntegerField(min_value=0)
    config_hash = serializers.CharField(allow_blank=True, default='')

    def validate_version(self, value):
        if value != FORMAT_VERSION:
            raise serializers.ValidationError(_('Unsupported model manifest version {}.').format(value))
        return value
