"""
Файл с функциями для автоматизации сборки Django приложений (модулей).
"""

import os
import importlib
import inspect
import logging

from typing import List

from django.apps import AppConfig

from src.config.env import env

logger = logging.getLogger('config')

def discover_installed_apps(apps_dir: str) -> List[str]:
    """
    Рекурсивно обходит директории и находит установленные приложения, включая подмодули.

    Аргументы:
        apps_dir (str): Базовая директория, в которой находятся приложения.

    Возвращает:
        list: Список строк, представляющих пути к установленным приложениям.
    """
    installed_apps = []

    def recursively_find_apps(current_dir: str, base_module: str) -> None:
        for app_name in sorted(os.listdir(current_dir)):
            app_path = os.path.join(current_dir, app_name)

            if not os.path.isdir(app_path) or app_name.startswith('__'):
                continue

            module_path = f'{base_module}.{app_name}' if base_module else app_name

            # Приложение определяется наличием apps.py с классом AppConfig
            if os.path.exists(os.path.join(app_path, 'apps.py')):
                try:
                    app_module = importlib.import_module(f'src.{module_path}.apps')
                except ModuleNotFoundError:
                    logger.error("Модуль не найден: %s.apps", module_path)
                else:
                    has_config = any(
                        issubclass(obj, AppConfig) and obj is not AppConfig
                        for _, obj in inspect.getmembers(app_module, inspect.isclass)
                    )
                    if has_config:
                        installed_apps.append(f'src.{module_path}')
                        logger.debug("Найдено приложение: %s", module_path)
                    else:
                        logger.error("%s.apps не имеет допустимого класса AppConfig", module_path)

            recursively_find_apps(app_path, module_path)

    recursively_find_apps(apps_dir, os.path.basename(os.path.normpath(apps_dir)))

    return installed_apps

def get_env_deploy_type() -> str:
    """
    Возвращает путь к модулю настроек по переменной окружения API_DEPLOY_TYPE.
    """
    development = 'src.config.patterns.development'
    production = 'src.config.patterns.production'

    deploy_type = env.str('API_DEPLOY_TYPE', default='development')

    if deploy_type == 'production':
        return production
    return development
