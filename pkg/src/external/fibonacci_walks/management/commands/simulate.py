"""
Команда Django для прогона блуждания с записью профиля плотности.

Пример использования:
>>> python src/manage.py simulate --model fib-coin --alpha pi/3 --beta pi/6 --plot
"""

import logging

from django.core.management.base import CommandParser

from src.external.fibonacci_walks.cli_io.base_commands import WalkCommand
from src.external.fibonacci_walks.cli_io.scripts import simulate
from src.external.fibonacci_walks.cli_io.serializers import RunConfigSerializer

logger = logging.getLogger('fibonacci_walks.commands')

class Command(WalkCommand):
    help = 'Прогон блуждания: density.csv, spread.csv, summary.json'
    serializer_class = RunConfigSerializer
    extra_options = ('init', 'width', 'site', 'snapshot_stride', 'seed', 'plot', 'fit_window', 'front_quantile')

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('--init', choices=['gaussian', 'delta'], default=None, help='Начальное условие')
        parser.add_argument('--width', type=float, default=None, help='Ширина гауссова пакета в узлах')
        parser.add_argument('--site', type=int, default=None, help='Узел дельта-состояния или центр пакета')
        parser.add_argument('--snapshot-stride', dest='snapshot_stride', type=int, default=None,
                            help='Шаг записи снимков')
        parser.add_argument('--seed', type=int, default=None, help='Зарезервировано')
        parser.add_argument('--plot', action='store_true', default=None, help='Сохранить density.svg')
        parser.add_argument('--fit-window', dest='fit_window', type=int, nargs=2, default=None,
                            metavar=('J_MIN', 'J_MAX'), help='Окно подгонки показателя')
        parser.add_argument('--front-quantile', dest='front_quantile', type=float, default=None,
                            help='Квантиль для скорости фронта')

    def handle(self, *args, **options) -> None:
        logger.info('Запуск команды simulate')
        config = self.validated(options)
        summary = simulate(config)

        for warning in summary['warnings']:
            self.stdout.write(self.style.WARNING(warning))

        empirical = summary['v_empirical']
        self.success(
            f"Прогон завершен: v = {summary['v_analytic']:.6f}, "
            f"v_фронт = {'-' if empirical is None else f'{empirical:.6f}'}, "
            f"результаты в {config.output_dir}"
        )
