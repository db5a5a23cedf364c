"""
Корневой пакет проекта; приложение Celery загружается вместе с Django, чтобы
задачи карты скоростей регистрировались через shared_task.
"""

from src.config.celery import celery_app

__all__ = ('celery_app',)
