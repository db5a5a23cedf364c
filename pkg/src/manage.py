"""
Файл содержит основную функцию для запуска Django-приложения.

Модуль настроек выбирается по переменной окружения API_DEPLOY_TYPE
(`src.config.patterns.development` по умолчанию). Затем выполняется команда Django,
переданная через аргументы командной строки (simulate, velocity_sweep, stencil, exponent, dirac_compare).
"""

import os
import sys

from pathlib import Path

# Корень репозитория должен быть в пути импорта для пакета `src`
ROOT_DIR = Path(__file__).resolve().parent.parent
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from src.core.utils.discovery import get_env_deploy_type  # noqa: E402

def main():
    """
    Основная функция для запуска Django-приложения.
    """
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', get_env_deploy_type())

    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Не удалось импортировать Django. Убедитесь, что Django установлен и "
            "доступен в вашей переменной окружения PYTHONPATH. Вы не забыли активировать виртуальное окружение?"
        ) from exc

    execute_from_command_line(sys.argv)

# Если скрипт запущен напрямую, вызываем функцию main
if __name__ == '__main__':
    main()
