"""
Настройки по областям: пути, приложения, директории результатов, логирование, Celery
и параметры расчетов блужданий. Объединяются в src/config/patterns/local.py.
"""
