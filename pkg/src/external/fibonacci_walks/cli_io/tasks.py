"""
Задачи Celery для построения карты скоростей.

Каждая задача - независимый короткий прогон; при WALKS_SWEEP_BACKEND=local
та же функция вызывается в текущем процессе.
"""

import logging
import math

from celery import shared_task
from django.conf import settings

from src.external.fibonacci_walks.core_types.models import SpinorField, WalkModel
from src.external.fibonacci_walks.exceptions import WalkError
from src.external.fibonacci_walks.observables.methods import front_velocity
from src.external.fibonacci_walks.walk_engine.methods import run

logger = logging.getLogger('fibonacci_walks')

SNAPSHOTS_PER_RUN = 40

@shared_task
def empirical_velocity_task(model: str, alpha: float, beta: float, size: int, steps: int,
                            quantile: float = None) -> float:
    """
    Эмпирическая скорость фронта короткого прогона из гауссова пакета.

    Ширина пакета масштабируется с размером решетки так, чтобы физическая ширина
    совпадала с прогоном по умолчанию.

    Returns:
        float: Скорость в узлах за шаг; nan, если фронт достиг шва решетки.
    """
    quantile = settings.WALKS_FRONT_QUANTILE if quantile is None else quantile
    walk_model = WalkModel.from_name(model, alpha, beta)
    width = max(1.0, settings.WALKS_DEFAULT_WIDTH * size / settings.WALKS_DEFAULT_SIZE)

    initial = SpinorField.gaussian(size, width, spinor=(1.0, 1.0j))
    walk_run = run(walk_model, initial, steps, snapshot_stride=max(1, steps // SNAPSHOTS_PER_RUN))

    try:
        return front_velocity(walk_run, quantile)
    except WalkError as e:
        logger.warning("Скорость фронта не определена для %s: %s", walk_model, e)
        return math.nan
