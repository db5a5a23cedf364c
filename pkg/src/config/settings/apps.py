"""
Этот файл содержит настройки установленных приложений Django.

Функция `discover_installed_apps` автоматически находит приложения в директории
внешних модулей и добавляет их в список установленных приложений.
"""
import os

from src.config.settings.base import BASE_DIR
from src.core.utils.discovery import discover_installed_apps

# Директория внешних модулей
EXTERNAL_MODULES_DIR = os.path.join(BASE_DIR, 'external')

EXTERNAL_MODULES_APPS = discover_installed_apps(EXTERNAL_MODULES_DIR)

# Определяем список установленных приложений
INSTALLED_APPS = EXTERNAL_MODULES_APPS + [
    'django.contrib.contenttypes',
    'rest_framework',
]
