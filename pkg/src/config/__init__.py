"""
Конфигурация проекта: загрузка .env, настройки Django по окружениям и приложение Celery.
"""
