from django.apps import AppConfig

"""
    Конфигурация приложения Fibonacci Walks.

    Приложение не хранит данных в базе: модели подмодулей - это dataclass-объекты,
    а команды управления запускают расчеты и записывают файлы результатов.

    Attributes:
        name (str): Полное Python-имя приложения, включая путь (`src.external.fibonacci_walks`).
        verbose_name (str): Человекочитаемое имя приложения.
"""

class FibonacciWalksConfig(AppConfig):
    name = 'src.external.fibonacci_walks'
    verbose_name = 'Фибоначчиевы квантовые блуждания'
