"""
Сериализаторы Django REST Framework для проверки параметров команд.

Каждый сериализатор принимает объединенные параметры (файл конфигурации и флаги)
и через save() создает объект конфигурации из cli_io.models.
"""

import math

from django.conf import settings
from rest_framework import serializers

from src.external.fibonacci_walks.cli_io.methods import parse_angle
from src.external.fibonacci_walks.cli_io.models import (
    DiracCompareConfig,
    RunConfig,
    StencilConfig,
    SweepConfig,
)
from src.external.fibonacci_walks.core_types.models import WalkVariant

MODEL_CHOICES = [variant.value for variant in WalkVariant]

FIBONACCI_CHOICES = [variant.value for variant in WalkVariant if variant.is_fibonacci]

class AngleField(serializers.Field):
    """
    Угол в радианах: число или литерал с π ("pi/4", "3pi/8", "-pi/2").
    """
    default_error_messages = {
        'invalid': 'Не удалось разобрать угол: {value}.',
    }

    def to_internal_value(self, data):
        try:
            return parse_angle(data)
        except (TypeError, ValueError):
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return float(value)

class RunConfigSerializer(serializers.Serializer):
    """
    Параметры прогона для команд simulate и exponent.
    """
    model = serializers.ChoiceField(choices=MODEL_CHOICES, default=WalkVariant.FIB_COIN.value)
    alpha = AngleField(default=math.pi / 4)
    beta = AngleField(default=math.pi / 8)
    size = serializers.IntegerField(min_value=2, default=lambda: settings.WALKS_DEFAULT_SIZE)
    steps = serializers.IntegerField(min_value=1, default=lambda: settings.WALKS_DEFAULT_STEPS)
    init = serializers.ChoiceField(choices=['gaussian', 'delta'], default='gaussian')
    width = serializers.FloatField(min_value=1.0, default=lambda: settings.WALKS_DEFAULT_WIDTH)
    site = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    snapshot_stride = serializers.IntegerField(min_value=1, default=lambda: settings.WALKS_DEFAULT_STRIDE)
    seed = serializers.IntegerField(default=0)
    output_dir = serializers.CharField(default=lambda: settings.OUTPUT_ROOT)
    plot = serializers.BooleanField(default=False)
    fit_window = serializers.ListField(
        child=serializers.IntegerField(min_value=1),
        min_length=2,
        max_length=2,
        default=lambda: list(settings.WALKS_FIT_WINDOW),
    )
    front_quantile = serializers.FloatField(default=lambda: settings.WALKS_FRONT_QUANTILE)

    def validate_fit_window(self, value):
        if value[0] > value[1]:
            raise serializers.ValidationError('Начало окна должно быть не больше конца.')
        return value

    def validate_front_quantile(self, value):
        if not 0.5 < value < 1.0:
            raise serializers.ValidationError('Квантиль должен лежать в интервале (0.5, 1).')
        return value

    def validate(self, attrs):
        site = attrs.get('site')
        if site is not None and site >= attrs['size']:
            raise serializers.ValidationError({'site': f"Узел должен быть меньше размера решетки {attrs['size']}."})
        return attrs

    def create(self, validated_data):
        return RunConfig(
            model=WalkVariant(validated_data['model']),
            alpha=validated_data['alpha'],
            beta=validated_data['beta'],
            size=validated_data['size'],
            steps=validated_data['steps'],
            init=validated_data['init'],
            width=validated_data['width'],
            site=validated_data['site'],
            snapshot_stride=validated_data['snapshot_stride'],
            seed=validated_data['seed'],
            output_dir=validated_data['output_dir'],
            plot=validated_data['plot'],
            fit_window=tuple(validated_data['fit_window']),
            front_quantile=validated_data['front_quantile'],
        )

class VelocitySweepSerializer(serializers.Serializer):
    model = serializers.ChoiceField(choices=MODEL_CHOICES, default=WalkVariant.FIB_COIN.value)
    resolution = serializers.IntegerField(min_value=2, default=50)
    empirical = serializers.BooleanField(default=False)
    size = serializers.IntegerField(min_value=16, default=lambda: settings.WALKS_SWEEP_SIZE)
    steps = serializers.IntegerField(min_value=16, default=lambda: settings.WALKS_SWEEP_STEPS)
    backend = serializers.ChoiceField(choices=['local', 'celery'], default=lambda: settings.WALKS_SWEEP_BACKEND)
    output_dir = serializers.CharField(default=lambda: settings.OUTPUT_ROOT)
    plot = serializers.BooleanField(default=False)

    def validate(self, attrs):
        if attrs['empirical'] and attrs['steps'] >= attrs['size'] // 2:
            raise serializers.ValidationError({'steps': 'Фронт короткого прогона достигнет шва решетки.'})
        return attrs

    def create(self, validated_data):
        return SweepConfig(**{**validated_data, 'model': WalkVariant(validated_data['model'])})

class StencilSerializer(serializers.Serializer):
    model = serializers.ChoiceField(choices=FIBONACCI_CHOICES, default=WalkVariant.FIB_COIN.value)
    alpha = AngleField(default=math.pi / 4)
    beta = AngleField(default=math.pi / 8)
    size = serializers.IntegerField(min_value=16, default=32)
    output_dir = serializers.CharField(allow_null=True, default=None)

    def create(self, validated_data):
        return StencilConfig(**{**validated_data, 'model': WalkVariant(validated_data['model'])})

class DiracCompareSerializer(serializers.Serializer):
    """
    Параметры сравнения блуждания с решением уравнения Дирака.

    Физическое время задается либо `time`, либо числом шагов `steps` на самой грубой решетке.
    """
    model = serializers.ChoiceField(choices=FIBONACCI_CHOICES, default=WalkVariant.FIB_COIN.value)
    alpha = AngleField(default=math.pi / 4)
    beta = AngleField(default=0.0)
    resolutions = serializers.ListField(
        child=serializers.IntegerField(min_value=16),
        min_length=2,
        default=lambda: list(settings.WALKS_DIRAC_RESOLUTIONS),
    )
    time = serializers.FloatField(min_value=0.0, allow_null=True, default=None)
    steps = serializers.IntegerField(min_value=0, allow_null=True, default=None)
    width = serializers.FloatField(min_value=0.0, default=lambda: settings.WALKS_DIRAC_WIDTH)
    output_dir = serializers.CharField(default=lambda: settings.OUTPUT_ROOT)

    def validate_width(self, value):
        if value <= 0.0:
            raise serializers.ValidationError('Ширина пакета должна быть положительной.')
        return value

    def validate(self, attrs):
        if attrs['time'] is not None and attrs['steps'] is not None:
            raise serializers.ValidationError({'steps': 'Укажите либо time, либо steps.'})
        coarsest = min(attrs['resolutions'])
        if attrs['width'] * coarsest / (2.0 * math.pi) < 1.0:
            raise serializers.ValidationError(
                {'resolutions': f"На решетке n = {coarsest} пакет уже одного узла; увеличьте n или width."}
            )
        return attrs

    def create(self, validated_data):
        resolutions = tuple(sorted(validated_data['resolutions']))
        if validated_data['steps'] is not None:
            time = validated_data['steps'] * 2.0 * math.pi / min(resolutions)
        elif validated_data['time'] is not None:
            time = validated_data['time']
        else:
            time = settings.WALKS_DIRAC_TIME

        return DiracCompareConfig(
            model=WalkVariant(validated_data['model']),
            alpha=validated_data['alpha'],
            beta=validated_data['beta'],
            resolutions=resolutions,
            time=time,
            width=validated_data['width'],
            output_dir=validated_data['output_dir'],
        )
