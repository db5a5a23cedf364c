"""
Команда Django для проверки сходимости блуждания к решению уравнения Дирака.

Пример использования:
>>> python src/manage.py dirac_compare --model fib-coin --alpha pi/4 --beta 0 --resolutions 512 1024 2048
"""

import logging

from django.core.management.base import CommandParser

from src.external.fibonacci_walks.cli_io.base_commands import WalkCommand
from src.external.fibonacci_walks.cli_io.scripts import dirac_compare
from src.external.fibonacci_walks.cli_io.serializers import DiracCompareSerializer

logger = logging.getLogger('fibonacci_walks.commands')

class Command(WalkCommand):
    help = 'L1-расстояние до решения Дирака на последовательности решеток: convergence.csv'
    serializer_class = DiracCompareSerializer
    ignored_flags = ('size',)
    extra_options = ('resolutions', 'time', 'width')

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        parser.add_argument('--resolutions', type=int, nargs='+', default=None, help='Размеры решеток')
        parser.add_argument('--time', type=float, default=None, help='Физическое время сравнения')
        parser.add_argument('--width', type=float, default=None,
                            help='Ширина гауссова пакета в физических единицах')

    def handle(self, *args, **options) -> None:
        logger.info('Запуск команды dirac_compare')
        config = self.validated(options)
        report = dirac_compare(config)

        self.stdout.write(report.table.to_string(index=False))

        if report.informational:
            self.stdout.write(self.style.WARNING('Нулевая скорость или нулевое время: результат информационный'))
            return
        if not report.decreasing:
            self.verification_failed('L1-расстояние не убывает строго с ростом n')
        self.success('L1-расстояние строго убывает с ростом n')
