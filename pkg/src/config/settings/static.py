"""
Файл содержащий пути к директориям результатов расчетов и логов.
"""

import os

from src.config.env import env
from src.config.settings.base import ROOT_DIR

# Корневая директория для файлов, которые пишут команды (CSV, JSON, SVG).
OUTPUT_ROOT = env.str('WALKS_OUTPUT_ROOT', default=os.path.join(ROOT_DIR, 'results'))

# Корневая директория для логов.
LOGS_ROOT = env.str('WALKS_LOGS_ROOT', default=os.path.join(ROOT_DIR, 'logs'))
