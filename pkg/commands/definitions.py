"""
Файл для определения Poetry команд.
"""

from commands.base import PoetryCommand

class SimulateCommand(PoetryCommand):
    """
    Прогон блуждания с записью density.csv, spread.csv и summary.json.
    """
    poetry_command_name = 'simulate'
    django_command_name = 'simulate'

class VelocitySweepCommand(PoetryCommand):
    """
    Карта аналитической скорости на сетке углов.
    """
    poetry_command_name = 'velocity-sweep'
    django_command_name = 'velocity_sweep'

class StencilCommand(PoetryCommand):
    """
    Сравнение коэффициентов шаблона в замкнутой форме с оракулом.
    """
    poetry_command_name = 'stencil'
    django_command_name = 'stencil'

class ExponentCommand(PoetryCommand):
    """
    Подгонка показателя расплывания.
    """
    poetry_command_name = 'exponent'
    django_command_name = 'exponent'

class DiracCompareCommand(PoetryCommand):
    """
    Сходимость блуждания к решению уравнения Дирака.
    """
    poetry_command_name = 'dirac-compare'
    django_command_name = 'dirac_compare'

class TestCommand(PoetryCommand):
    poetry_command_name = 'test'
    script_command = 'pytest'

class StartCeleryWorkerCommand(PoetryCommand):
    """
    Команда для запуска Celery worker, выполняющего короткие прогоны карты скоростей.
    """
    poetry_command_name = 'start_celery_worker'
    script_command = 'celery -A src.config.celery:celery_app worker --loglevel=info --pool=threads'
