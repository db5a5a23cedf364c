"""
Базовый класс команд квантовых блужданий с общими флагами.
"""

import logging

from typing import Any, Dict

from django.core.management.base import CommandParser

from src.core.utils.base.base_commands import ValidatedCommand
from src.external.fibonacci_walks.cli_io.serializers import MODEL_CHOICES

logger = logging.getLogger('fibonacci_walks.commands')

COMMON_FLAGS = {
    'model': dict(choices=MODEL_CHOICES, help='Модель блуждания'),
    'alpha': dict(help='Угол α (θ для standard): число или литерал вида pi/4, 3pi/8'),
    'beta': dict(help='Угол β: число или литерал вида pi/8'),
    'size': dict(type=int, help='Размер решетки n'),
    'steps': dict(type=int, help='Число шагов (трансляций)'),
    'output_dir': dict(help='Директория для файлов результатов'),
}

class WalkCommand(ValidatedCommand):
    """
    Команда с общими флагами --model, --alpha, --beta, --size, --steps, --output-dir и --config.

    Атрибуты:
        ignored_flags: Общие флаги, которые команда принимает, но не использует.
        extra_options: Имена дополнительных параметров команды.
    """
    ignored_flags: tuple[str, ...] = ()
    extra_options: tuple[str, ...] = ()

    @property
    def option_names(self) -> tuple[str, ...]:
        return tuple(COMMON_FLAGS) + self.extra_options

    def add_arguments(self, parser: CommandParser) -> None:
        super().add_arguments(parser)
        for name, kwargs in COMMON_FLAGS.items():
            parser.add_argument(f"--{name.replace('_', '-')}", dest=name, default=None, **kwargs)

    def merge_options(self, options: Dict[str, Any]) -> Dict[str, Any]:
        merged = super().merge_options(options)
        for name in self.ignored_flags:
            if merged.pop(name, None) is not None:
                logger.warning("Параметр %s не используется командой и пропущен", name)
        return merged
