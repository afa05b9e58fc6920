from django.utils.translation import gettext_lazy as _
from rest_framework import serializers

from .. import __version__

MANIFEST_VERSION = 1


class SplitManifestSerializer(serializers.Serializer):
    version = serializers.IntegerField(default=MANIFEST_VERSION)
    toolkit_version = serializers.CharField(default=__version__)
    fold_index = serializers.IntegerField(min_value=0)
    seed = serializers.IntegerField(min_value=0)
    test_fraction = serializers.FloatField()
    graph_checksum = serializers.RegexField(r'^[0-9a-f]{64}$')
    config_hash = serializers.CharField(allow_blank=True, default='')
    train_links = serializers.IntegerField(min_value=0)
    test_links = serializers.IntegerField(min_value=1)

    def validate_version(self, value):
        if value != MANIFEST_VERSION:
            msg = _('Unsupported split manifest version {}.').format(value)
            raise serializers.ValidationError(msg)
        return value

    def validate_test_fraction(self, value):
        if not 0 < value < 1:
            raise serializers.ValidationError(_('Must lie strictly between 0 and 1.'))
        return value
