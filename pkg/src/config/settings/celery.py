"""
Файл содержащий конфигурацию Celery для Django-приложения.
Celery используется для распределения коротких прогонов при построении карты скоростей.

Настройки:
    CELERY_BROKER_URL: URL-адрес брокера сообщений SQLite
    CELERY_RESULT_BACKEND: URL-адрес бэкенда для хранения результатов задач
    CELERY_TASK_ALWAYS_EAGER: Выполнять задачи в текущем процессе без брокера

    CELERY_ACCEPT_CONTENT: Список разрешенных форматов сериализации
    CELERY_TASK_SERIALIZER: Формат сериализации для задач
    CELERY_RESULT_SERIALIZER: Формат сериализации для результатов
    CELERY_TIMEZONE: Временная зона
    CELERY_BROKER_CONNECTION_RETRY_ON_STARTUP: Флаг повторного подключения к брокеру при запуске
"""

from src.config.env import env

CELERY_BROKER_URL = env.str('CELERY_BROKER_URL', default='sqla+sqlite:///celery/celerydb.sqlite')
CELERY_RESULT_BACKEND = env.str('CELERY_RESULT_BACKEND', default='db+sqlite:///celery/results.sqlite')
CELERY_TASK_ALWAYS_EAGER = env.bool('CELERY_TASK_ALWAYS_EAGER', default=False)

CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'
CELERY_BROKER_CONNECTION_RETRY_ON_STARTUP = True
