"""
Приложение для моделирования фибоначчиевых дискретных квантовых блужданий.

Подмодули:
    core_types - состояния и операторы (монеты, спиноры, сдвиг)
    coin_sequences - последовательности монет FDTQW-I и FDTQW-II, часы Фибоначчи
    walk_engine - пошаговая эволюция и стробоскопические прогоны
    stencil - шестишаговые коэффициенты в замкнутой форме и численный оракул
    continuum - непрерывный предел: коэффициенты переноса, скорости, уравнение Дирака
    observables - плотность, моменты, показатель расплывания, скорость фронта
    cli_io - конфигурация прогонов, команды и файлы результатов
"""
