"""
Основной конфигурационный файл Celery для Django-приложения.
Отвечает за инициализацию Celery и автоматическое обнаружение задач.

Функциональность:
    - Инициализация Celery приложения
    - Настройка интеграции с Django
    - Автоматическое обнаружение задач (прогоны для карты скоростей)
"""

import os

from celery import Celery

from django.conf import settings

from src.core.utils.discovery import get_env_deploy_type

# Определение типа развертывания и настройка переменной окружения Django
os.environ.setdefault('DJANGO_SETTINGS_MODULE', get_env_deploy_type())

celery_app = Celery('src')
celery_app.config_from_object('django.conf:settings', namespace='CELERY')
celery_app.autodiscover_tasks(lambda: settings.INSTALLED_APPS)
