"""
Файл с определениями перечислений (enums) для приложения.

Содержит определения перечислимых типов, используемых в приложении:
- ExitCode: коды завершения команд (успех, ошибка использования, провал проверки)
"""

from enum import IntEnum

class ExitCode(IntEnum):
    SUCCESS = 0
    USAGE = 1
    VERIFICATION = 2
