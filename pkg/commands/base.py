"""
Файл для определения базовых классов предоставляющих механизм для выполнения команд через Poetry.
"""

import shlex
import subprocess
import sys

from typing import Optional

class PoetryCommand:
    """
        Базовый класс для выполнения команд через Poetry: команд управления Django и произвольных скриптов.

        Аргументы:
            poetry_command_name (str): Имя команды, которое будет использовано в Poetry.
            django_command_name (Optional[str]): Имя команды, которое будет передано Django через manage.py.
            script_command (Optional[str]): Командная строка пользовательского скрипта.

        Пример:
            Для запуска прогона блуждания:
            >>> poetry run cmd simulate --model fib-coin --alpha pi/3 --beta pi/6

            Команда будет выполнена как: `python src/manage.py simulate --model fib-coin ...`
    """
    poetry_command_name: str
    # Имя команды django
    django_command_name: Optional[str] = None
    # Пользовательская команда
    script_command: Optional[str] = None

    def __init__(self, command_name: Optional[str] = None):
        """
        Исключения:
            ValueError: Если не указано имя команды для выполнения.
        """
        self.command_name = command_name or self.django_command_name or self.script_command

        if not self.command_name:
            raise ValueError("Не указано имя команды для выполнения.")

    def build(self, *args: str) -> list[str]:
        """
        Формирует список аргументов процесса.

        Исключения:
            RuntimeError: Если не указаны ни команда Django, ни пользовательский скрипт.
        """
        if self.django_command_name:
            return [sys.executable, 'src/manage.py', self.command_name, *args]
        if self.script_command:
            return [*shlex.split(self.script_command), *args]
        raise RuntimeError("Не удалось определить, какую команду выполнять.")

    def run(self, *args: str) -> int:
        """
        Выполняет команду с переданными аргументами.

        Возвращает:
            int: Код завершения процесса (0 - успех, 1 - ошибка использования, 2 - провал проверки).
        """
        return subprocess.run(self.build(*args), check=False).returncode
