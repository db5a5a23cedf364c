"""
Файл содержащий базовую конфигурацию для Django-приложения.
Он включает настройки базового каталога проекта.
"""

from pathlib import Path

"""
Определяет базовый каталог проекта.

BASE_DIR указывает на директорию src, ROOT_DIR - на корень репозитория, где лежат
pyproject.toml, файл .env и директории с результатами расчетов и логами.
"""
BASE_DIR = Path(__file__).resolve().parent.parent.parent

ROOT_DIR = BASE_DIR.parent
