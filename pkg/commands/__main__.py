"""
Файл для связи poetry и команд созданных в definitions.py.

Данный функционал взаимодействует с Poetry при помощи следующей секции pyproject.toml файла:

[tool.poetry.scripts]
cmd = "commands.__main__:main"

Пример команды для прогона блуждания:
>>> poetry run cmd simulate --model fib-step --alpha pi/3 --beta pi/6 --plot
"""

import sys
import inspect
import logging

from commands.definitions import PoetryCommand
from src.config.settings.logger import LOGGING
from src.core.utils.enums import ExitCode

# Настройка логгера для скриптов
logger = logging.getLogger('commands')

formatter = logging.Formatter(
    fmt=LOGGING['formatters']['simple']['format'],
    style=LOGGING['formatters']['simple']['style']
)

console_handler = logging.StreamHandler()
console_handler.setFormatter(formatter)
logger.addHandler(console_handler)
logger.setLevel(logging.INFO)

def available_commands() -> dict[str, type[PoetryCommand]]:
    """Классы-наследники PoetryCommand из commands.definitions по имени команды Poetry."""
    module = sys.modules['commands.definitions']
    return {
        cls.poetry_command_name: cls
        for _, cls in inspect.getmembers(module, inspect.isclass)
        if issubclass(cls, PoetryCommand) and cls is not PoetryCommand
    }

def main():
    """
    Точка входа для управления командами через Poetry.

    Код завершения вызванной команды передается наружу без изменений:
    0 - успех, 1 - ошибка использования, 2 - провал проверки.

    Пример использования:
        ```bash
        poetry run cmd stencil --model fib-coin --alpha 1.0 --beta 0.3
        poetry run cmd velocity-sweep --resolution 100 --plot
        poetry run cmd test
        ```
    """
    commands = available_commands()

    if len(sys.argv) < 2:
        logger.info("Использование: poetry run cmd <команда> [аргументы...]")
        logger.info("Доступные команды: %s", ", ".join(commands))
        sys.exit(ExitCode.USAGE)

    command_name = sys.argv[1]
    CommandClass = commands.get(command_name)
    if not CommandClass:
        logger.error("Неизвестная команда: %s", command_name)
        logger.info("Доступные команды: %s", ", ".join(commands))
        sys.exit(ExitCode.USAGE)

    sys.exit(CommandClass().run(*sys.argv[2:]))

if __name__ == "__main__":
    main()
