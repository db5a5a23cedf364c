"""
Команда Django для подгонки показателя расплывания σ_j ~ j^η.

Пример использования:
>>> python src/manage.py exponent --model fib-coin --alpha pi/4 --beta pi/8
"""

import logging

from django.core.management.base import CommandParser

from src.external.fibonacci_walks.cli_io.base_commands import WalkCommand
from src.external.fibonacci_walks.cli_io.scripts import EXPONENT_BAND, exponent_report
from src.external.fibonacci_walks.cli_io.serializers import RunConfigSerializer

logger = logging.getLogger('fibonacci_walks.commands')

class Command(WalkCommand):
    help = 'Показатель расплывания в окне шагов: spread.csv, exponent.json'
    serializer_class = RunConfigSerializer
    extra_options = ('init', 'width', 'snapshot_stride', 'fit_window')

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('--init', choices=['gaussian', 'delta'], default=None, help='Начальное условие')
        parser.add_argument('--width', type=float, default=None, help='Ширина гауссова пакета в узлах')
        parser.add_argument('--snapshot-stride', dest='snapshot_stride', type=int, default=None,
                            help='Шаг записи снимков')
        parser.add_argument('--fit-window', dest='fit_window', type=int, nargs=2, default=None,
                            metavar=('J_MIN', 'J_MAX'), help='Окно подгонки показателя')

    def handle(self, *args, **options) -> None:
        logger.info('Запуск команды exponent')
        config = self.validated(options)
        report = exponent_report(config)

        for warning in report['warnings']:
            self.stdout.write(self.style.WARNING(warning))

        if report['in_band'] is None:
            self.stdout.write(self.style.WARNING('Показатель не определен, проверка пропущена'))
            return

        eta = report['exponent']['eta']
        if not report['in_band']:
            self.verification_failed(f"Показатель η = {eta:.4f} вне интервала {EXPONENT_BAND}")
        self.success(f"Показатель η = {eta:.4f}")
