"""
Команда Django для построения карты скоростей v(α, β).

Пример использования:
>>> python src/manage.py velocity_sweep --model fib-step --resolution 50 --empirical
"""

import logging

import numpy as np

from django.core.management.base import CommandParser

from src.external.fibonacci_walks.cli_io.base_commands import WalkCommand
from src.external.fibonacci_walks.cli_io.scripts import velocity_sweep
from src.external.fibonacci_walks.cli_io.serializers import VelocitySweepSerializer

logger = logging.getLogger('fibonacci_walks.commands')

class Command(WalkCommand):
    help = 'Карта аналитической (и эмпирической) скорости на [0, π/2]²: contour.csv'
    serializer_class = VelocitySweepSerializer
    ignored_flags = ('alpha', 'beta')
    extra_options = ('resolution', 'empirical', 'backend', 'plot')

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('--resolution', type=int, default=None, help='Число точек сетки по каждой оси')
        parser.add_argument('--empirical', action='store_true', default=None,
                            help='Добавить скорости коротких прогонов')
        parser.add_argument('--backend', choices=['local', 'celery'], default=None,
                            help='Где выполнять короткие прогоны')
        parser.add_argument('--plot', action='store_true', default=None, help='Сохранить contour.svg')

    def handle(self, *args, **options) -> None:
        logger.info('Запуск команды velocity_sweep')
        config = self.validated(options)
        frame = velocity_sweep(config)

        message = f"Карта скоростей {config.model.value}: {len(frame)} точек"
        if 'abs_error' in frame:
            message += f", наибольшее расхождение {np.nanmax(frame['abs_error']):.4f}"
        self.success(message)
