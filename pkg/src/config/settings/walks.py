"""
Файл содержащий параметры расчетов квантовых блужданий по умолчанию.

Значения по умолчанию соответствуют эксперименту с профилем плотности:
решетка из 2^11 узлов, 800 шагов, гауссов начальный пакет шириной 20 узлов.
Каждое значение можно переопределить переменной окружения с тем же именем.

Настройки:
    WALKS_DEFAULT_SIZE: Число узлов решетки
    WALKS_DEFAULT_STEPS: Число шагов (трансляций)
    WALKS_DEFAULT_WIDTH: Ширина гауссова пакета в узлах
    WALKS_DEFAULT_STRIDE: Шаг сохранения снимков состояния
    WALKS_FRONT_QUANTILE: Квантиль вероятности для оценки скорости фронта
    WALKS_FIT_WINDOW: Окно шагов для подгонки показателя расплывания
    WALKS_SWEEP_SIZE, WALKS_SWEEP_STEPS: Размер решетки и число шагов коротких прогонов при построении карты скоростей
    WALKS_SWEEP_BACKEND: local - расчет в текущем процессе, celery - распределение по воркерам
    WALKS_DIRAC_RESOLUTIONS, WALKS_DIRAC_TIME, WALKS_DIRAC_WIDTH: Параметры сравнения с решением уравнения Дирака
"""

import math

from src.config.env import env

WALKS_DEFAULT_SIZE = env.int('WALKS_DEFAULT_SIZE', default=2 ** 11)
WALKS_DEFAULT_STEPS = env.int('WALKS_DEFAULT_STEPS', default=800)
WALKS_DEFAULT_WIDTH = env.float('WALKS_DEFAULT_WIDTH', default=20.0)
WALKS_DEFAULT_STRIDE = env.int('WALKS_DEFAULT_STRIDE', default=8)

WALKS_FRONT_QUANTILE = env.float('WALKS_FRONT_QUANTILE', default=0.99)
WALKS_FIT_WINDOW = tuple(env.list('WALKS_FIT_WINDOW', cast=int, default=[100, 800]))

WALKS_SWEEP_SIZE = env.int('WALKS_SWEEP_SIZE', default=2 ** 9)
WALKS_SWEEP_STEPS = env.int('WALKS_SWEEP_STEPS', default=120)
WALKS_SWEEP_BACKEND = env.str('WALKS_SWEEP_BACKEND', default='local')

# Сравнение с уравнением Дирака: физическое время 3π/4 и ширина пакета 20·2π/2^11
WALKS_DIRAC_RESOLUTIONS = env.list('WALKS_DIRAC_RESOLUTIONS', cast=int, default=[2 ** 9, 2 ** 10, 2 ** 11, 2 ** 12])
WALKS_DIRAC_TIME = env.float('WALKS_DIRAC_TIME', default=0.75 * math.pi)
WALKS_DIRAC_WIDTH = env.float('WALKS_DIRAC_WIDTH', default=20.0 * 2.0 * math.pi / 2 ** 11)
