"""
Пакет скриптов Poetry: `poetry run cmd <команда>` запускает команды управления Django
(simulate, velocity_sweep, stencil, exponent, dirac_compare), тесты и Celery worker.
"""
