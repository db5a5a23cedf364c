"""
Команда Django для сверки коэффициентов шаблона в замкнутой форме с оракулом.

Пример использования:
>>> python src/manage.py stencil --model fib-step --alpha pi/4 --beta pi/8
"""

import logging

from src.external.fibonacci_walks.cli_io.base_commands import WalkCommand
from src.external.fibonacci_walks.cli_io.scripts import stencil_report
from src.external.fibonacci_walks.cli_io.serializers import StencilSerializer

logger = logging.getLogger('fibonacci_walks.commands')

STENCIL_TOLERANCE = 1e-9

class Command(WalkCommand):
    help = 'Таблицы A, B, C, D шаблона: замкнутая форма и оракул рядом'
    serializer_class = StencilSerializer
    ignored_flags = ('steps',)

    def handle(self, *args, **options) -> None:
        logger.info('Запуск команды stencil')
        config = self.validated(options)
        report = stencil_report(config)

        self.stdout.write(report.table.to_string(index=False, float_format=lambda value: f"{value: .12e}"))
        self.stdout.write(f"Наибольшее расхождение: {report.discrepancy:.3e}")

        if report.discrepancy > STENCIL_TOLERANCE:
            self.verification_failed(
                f"Расхождение шаблона {report.discrepancy:.3e} превышает {STENCIL_TOLERANCE:g}"
            )
        self.success('Коэффициенты совпадают с оракулом')
