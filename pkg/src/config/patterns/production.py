"""
Файл содержащий настройки для продакшн (production) окружения Django-приложения.

Он импортирует базовые настройки из модуля `local`. В продакшн окружении
секретный ключ обязателен и берется из переменной окружения.
"""

from src.config.patterns.local import *
from src.config.env import env

SECRET_KEY = env.str('API_SECRET_KEY')

DEBUG = False
