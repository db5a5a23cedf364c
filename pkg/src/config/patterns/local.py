"""
Файл объединяющий локальные настройки для Django-приложения.

Он импортирует и объединяет настройки из модулей конфигурации: базовые пути,
установленные приложения, директории результатов, логирование, Celery и
параметры расчетов квантовых блужданий.
"""

from src.config.settings.base import *
from src.config.settings.apps import *
from src.config.settings.static import *
from src.config.settings.logger import *
from src.config.settings.celery import *
from src.config.settings.walks import *
