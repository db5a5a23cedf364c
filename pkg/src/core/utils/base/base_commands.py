"""
Базовые классы команд управления Django.

ValidatedCommand объединяет параметры из YAML-файла (--config) и флагов командной строки,
проверяет их сериализатором Django REST Framework и переводит ошибки в коды завершения ExitCode.
"""

import logging
import sys

from functools import partial
from typing import Any, Dict, Optional

import yaml

from django.core.management.base import BaseCommand, CommandError, CommandParser
from rest_framework import serializers

from src.core.utils.enums import ExitCode
from src.core.utils.methods import format_errors

logger = logging.getLogger('fibonacci_walks.commands')

def _usage_error(parser: CommandParser, message: str) -> None:
    """
    Ошибка разбора аргументов: завершение с кодом ExitCode.USAGE вместо кода argparse.
    """
    if parser.called_from_command_line:
        parser.print_usage(sys.stderr)
        parser.exit(ExitCode.USAGE, f"{parser.prog}: error: {message}\n")
    raise CommandError(f"Error: {message}", returncode=ExitCode.USAGE)

def load_config_file(path: str) -> Dict[str, Any]:
    """
    Загружает YAML-файл конфигурации; ключи - имена флагов (через дефис или подчеркивание).

    Аргументы:
        path (str): Путь к файлу.

    Возвращает:
        Dict[str, Any]: Параметры с ключами в формате имен аргументов (`output_dir`).

    Исключения:
        ValueError: если файл не читается или не содержит отображение.
    """
    try:
        with open(path, 'r', encoding='utf-8') as config_file:
            content = yaml.safe_load(config_file)
    except (OSError, yaml.YAMLError) as e:
        raise ValueError(f"Не удалось прочитать файл конфигурации {path}: {e}") from e

    if content is None:
        return {}
    if not isinstance(content, dict):
        raise ValueError(f"Файл конфигурации {path} должен содержать отображение ключ-значение")

    return {str(key).lstrip('-').replace('-', '_'): value for key, value in content.items()}

class ValidatedCommand(BaseCommand):
    """
    Команда с проверкой параметров сериализатором.

    Атрибуты:
        serializer_class: Сериализатор DRF для объединенных параметров.
        option_names: Имена параметров, которые передаются в сериализатор.
    """
    serializer_class: Optional[type[serializers.Serializer]] = None
    option_names: tuple[str, ...] = ()

    def create_parser(self, prog_name: str, subcommand: str, **kwargs) -> CommandParser:
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(_usage_error, parser)
        return parser

    def add_arguments(self, parser: CommandParser) -> None:
        parser.add_argument(
            '--config',
            default=None,
            help='YAML-файл с параметрами; флаги командной строки имеют приоритет'
        )

    def merge_options(self, options: Dict[str, Any]) -> Dict[str, Any]:
        """
        Объединяет параметры файла конфигурации и флагов; флаги со значением None не переопределяют файл.
        """
        merged = {}
        if options.get('config'):
            try:
                merged.update(load_config_file(options['config']))
            except ValueError as e:
                raise CommandError(str(e), returncode=ExitCode.USAGE) from e

        unknown = set(merged) - set(self.option_names)
        if unknown:
            raise CommandError(
                f"Неизвестные параметры в файле конфигурации: {', '.join(sorted(unknown))}",
                returncode=ExitCode.USAGE,
            )

        for name in self.option_names:
            if options.get(name) is not None:
                merged[name] = options[name]
        return merged

    def validated(self, options: Dict[str, Any]) -> Any:
        """
        Проверяет объединенные параметры и возвращает объект, созданный сериализатором.

        Исключения:
            CommandError: с кодом ExitCode.USAGE при ошибках валидации.
        """
        serializer = self.serializer_class(data=self.merge_options(options))
        if not serializer.is_valid():
            message = format_errors(serializer.errors)
            logger.error("Недопустимые параметры: %s", message)
            raise CommandError(f"Недопустимые параметры: {message}", returncode=ExitCode.USAGE)
        return serializer.save()

    def success(self, message: str) -> None:
        logger.info(message)
        self.stdout.write(self.style.SUCCESS(message))

    def verification_failed(self, message: str) -> None:
        """Сообщает о провале проверки и завершает команду с кодом ExitCode.VERIFICATION."""
        logger.error(message)
        raise CommandError(message, returncode=ExitCode.VERIFICATION)
