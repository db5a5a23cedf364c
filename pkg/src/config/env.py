"""
Файл для загрузки переменных окружения из .env файла для Django-приложения.

Функциональность:
    - Загрузка переменных окружения из .env файла в корне репозитория
    - Предоставление доступа к переменным окружения через объект env
    - Автоматическое преобразование типов данных переменных окружения

Использование:
    from src.config.env import env

    WALKS_DEFAULT_SIZE = env.int('WALKS_DEFAULT_SIZE', default=2048)
    WALKS_SWEEP_BACKEND = env.str('WALKS_SWEEP_BACKEND', default='local')
"""

import os

import environ

from src.config.settings.base import ROOT_DIR

ENV_DIR = os.path.join(ROOT_DIR, '.env')

env = environ.Env()

# Отсутствие файла .env допустимо: все переменные имеют значения по умолчанию
if os.path.exists(ENV_DIR):
    environ.Env.read_env(ENV_DIR)
