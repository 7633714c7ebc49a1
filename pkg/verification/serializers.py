from fractions import Fraction

from rest_framework import serializers

from .checks import MODEL_BUILDERS, VARIANT_CHOICES, check_names


class RationalField(serializers.Field):
    """Exact rationals as "p/q" in lowest terms, integers as "p"."""

    default_error_messages = {
        'invalid': 'A rational number such as "3", "-1/2" or "7/30" is required.',
    }

    def to_representation(self, value):
        return str(Fraction(value))

    def to_internal_value(self, data):
        try:
            return Fraction(str(data))
        except (ValueError, ZeroDivisionError):
            self.fail('invalid')


class FailureDetailSerializer(serializers.Serializer):
    location = serializers.CharField()
    expected = RationalField()
    actual = RationalField()


class CheckReportSerializer(serializers.Serializer):
    check = serializers.CharField()
    parameters = serializers.DictField()
    status = serializers.ChoiceField(choices=['pass', 'fail'])
    first_failure = FailureDetailSerializer(allow_null=True)
    elapsed_ms = serializers.FloatField()
    note = serializers.CharField(allow_blank=True)


class SeriesTermSerializer(serializers.Serializer):
    """One {word: [names], coeff: "p/q"} record of a series."""
    word = serializers.ListField(child=serializers.CharField())
    coeff = RationalField()


class BernoulliEntrySerializer(serializers.Serializer):
    n = serializers.IntegerField(min_value=0)
    value = RationalField()


class BernoulliOptionsSerializer(serializers.Serializer):
    max = serializers.IntegerField(min_value=0, max_value=2000)


class BchOptionsSerializer(serializers.Serializer):
    order = serializers.IntegerField(min_value=1, max_value=16)
    form = serializers.ChoiceField(choices=['log', 'direct', 'linear'], default='log')


class GaugeOptionsSerializer(serializers.Serializer):
    model = serializers.ChoiceField(choices=['ls', 'interval', 'probe'])
    x = serializers.CharField()
    a = serializers.CharField()
    order = serializers.IntegerField(min_value=2, max_value=16)

    def validate(self, attrs):
        """Both generators must belong to the chosen model."""
        alphabet = MODEL_BUILDERS[attrs['model']](2).alphabet
        for key in ('x', 'a'):
            if attrs[key] not in alphabet:
                raise serializers.ValidationError(
                    {key: f"{attrs[key]!r} is not a generator of {attrs['model']} ({', '.join(alphabet.names)})"}
                )
        return attrs


class VerifyOptionsSerializer(serializers.Serializer):
    check = serializers.ChoiceField(choices=check_names())
    order = serializers.IntegerField(min_value=2, max_value=16, required=False, allow_null=True)
    max_n = serializers.IntegerField(min_value=1, max_value=500, required=False, allow_null=True)
    min_n = serializers.IntegerField(min_value=2, required=False, allow_null=True)
    max_weight = serializers.IntegerField(min_value=0, max_value=200, required=False, allow_null=True)
    variant = serializers.ChoiceField(choices=VARIANT_CHOICES, required=False, allow_null=True)
    samples = serializers.IntegerField(min_value=1, max_value=1000, required=False, allow_null=True)

    def validate(self, attrs):
        max_n, min_n = attrs.get('max_n'), attrs.get('min_n')
        if max_n is not None and min_n is not None and min_n > max_n:
            raise serializers.ValidationError({'min_n': 'must not exceed --max-n.'})
        return attrs


class RunAllOptionsSerializer(serializers.Serializer):
    order = serializers.IntegerField(min_value=2, max_value=16, required=False, allow_null=True)
