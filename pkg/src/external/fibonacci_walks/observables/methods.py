"""
Наблюдаемые блуждания: плотность, моменты на периодической решетке,
показатель расплывания и эмпирическая скорость фронта.
"""

import logging
import math

import numpy as np

from src.external.fibonacci_walks.core_types.models import SpinorField
from src.external.fibonacci_walks.exceptions import InsufficientDataError, LatticeWrapError
from src.external.fibonacci_walks.observables.models import ExponentFit, Moments, SpreadEntry, SpreadSeries
from src.external.fibonacci_walks.walk_engine.models import WalkRun

logger = logging.getLogger('fibonacci_walks')

SEAM_PROBABILITY = 1e-10

NORMALIZATION_TOLERANCE = 1e-8

MIN_FIT_POINTS = 8

MIN_FRONT_TRAVEL = 20

def density(field: SpinorField) -> np.ndarray:
    """ρ[m] = |u_m|² + |d_m|²."""
    return np.abs(field.u) ** 2 + np.abs(field.d) ** 2

def circular_centroid(rho: np.ndarray) -> float:
    """Центр распределения на кольце из n узлов, в узлах [0, n)."""
    n = rho.size
    phases = np.exp(2j * np.pi * np.arange(n) / n)
    angle = np.angle(np.sum(rho * phases))
    return float(np.mod(angle * n / (2 * np.pi), n))

def displacements(n: int, center: float) -> np.ndarray:
    """Смещения узлов от центра, приведенные к [−n/2, n/2)."""
    return np.mod(np.arange(n) - center + n / 2, n) - n / 2

def _check_seam(rho: np.ndarray, offsets: np.ndarray) -> None:
    seam_mass = float(np.sum(rho[np.abs(offsets) >= rho.size / 2 - 1]))
    if seam_mass > SEAM_PROBABILITY:
        raise LatticeWrapError(
            f"Вероятность {seam_mass:.3e} у шва решетки: распределение охватывает больше половины кольца"
        )

def initial_reach(rho: np.ndarray, center: float) -> float:
    """Наибольшее расстояние от `center` до узла с вероятностью выше порога шва."""
    offsets = np.abs(displacements(rho.size, center))
    occupied = offsets[rho > SEAM_PROBABILITY]
    return float(np.max(occupied)) if occupied.size else 0.0

def _check_light_cone(walk_run: WalkRun, center: float) -> None:
    """
    Граница светового конуса: носитель растет не больше чем на узел за шаг.
    Шов достижим, как только начальный радиус плюс число шагов доходит до n/2 − 1,
    в том числе между записанными снимками.
    """
    reach = initial_reach(density(walk_run.first), center)
    start = walk_run.snapshots[0].step
    for snapshot in walk_run.snapshots:
        if reach + snapshot.step - start >= walk_run.n / 2 - 1:
            raise LatticeWrapError(
                f"К шагу {snapshot.step} носитель радиуса {reach:g} + {snapshot.step - start} "
                f"может достичь шва решетки n = {walk_run.n}"
            )

def moments(rho: np.ndarray, dx: float = 1.0, center: float = None) -> Moments:
    """
    Среднее и стандартное отклонение распределения на периодической решетке.

    Смещения отсчитываются от опорного узла `center` и приводятся к [−n/2, n/2).
    Для прогона опорный узел - центр начального состояния, от которого фронты удаляются
    не больше чем на один узел за шаг.
    Без опорного узла используется круговой центр тяжести самого распределения.

    Args:
        rho (np.ndarray): Нормированное распределение вероятности.
        dx (float): Шаг решетки для физических единиц.
        center (float, optional): Опорный узел.

    Returns:
        Moments: Среднее (по модулю n) и стандартное отклонение в узлах.

    Raises:
        ValueError: если Σρ отличается от 1 больше чем на 1e-8.
        LatticeWrapError: если у шва решетки есть заметная вероятность.
    """
    rho = np.asarray(rho, dtype=float)
    total = float(np.sum(rho))
    if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
        raise ValueError(f"Распределение не нормировано: Σρ = {total:.12g}")

    if center is None:
        center = circular_centroid(rho)
    offsets = displacements(rho.size, center)
    _check_seam(rho, offsets)

    shift = float(np.sum(offsets * rho))
    variance = float(np.sum(offsets ** 2 * rho)) - shift ** 2

    return Moments(
        mean=float(np.mod(center + shift, rho.size)),
        sigma=math.sqrt(max(variance, 0.0)),
        dx=dx,
    )

def spread_series(walk_run: WalkRun) -> SpreadSeries:
    """
    Норма, среднее и ширина для каждого снимка прогона относительно центра начального состояния.
    """
    origin = circular_centroid(density(walk_run.first))
    _check_light_cone(walk_run, origin)

    entries = []
    for snapshot in walk_run.snapshots:
        rho = density(snapshot.field)
        norm = float(np.sum(rho))
        result = moments(rho / norm, snapshot.field.dx, origin)
        entries.append(SpreadEntry(j=snapshot.step, norm=norm, mean=result.mean, sigma=result.sigma))

    series = SpreadSeries(entries, walk_run.model.variant, walk_run.model.angles)
    if series.norm_drift() > 1e-10:
        logger.warning("Дрейф нормы %.3e в ряду %s", series.norm_drift(), walk_run.model)
    return series

def spreading_exponent(series: SpreadSeries, window: tuple[int, int] = (100, 800)) -> ExponentFit:
    """
    Показатель η в σ_j ~ j^η: наклон log σ_j от log j в окне [j_min, j_max].

    Args:
        series (SpreadSeries): Ряд расплывания.
        window (tuple[int, int]): Окно аппроксимации, j_min ≥ 1.

    Returns:
        ExponentFit: Результат; при нулевой ширине в окне fitted = False и eta = nan.

    Raises:
        ValueError: если j_min < 1 или окно пустое.
        InsufficientDataError: если в окне меньше 8 точек.
    """
    j_min, j_max = window
    if j_min < 1 or j_max < j_min:
        raise ValueError(f"Недопустимое окно аппроксимации: {window}")

    selected = [entry for entry in series.entries if j_min <= entry.j <= j_max]
    if len(selected) < MIN_FIT_POINTS:
        raise InsufficientDataError(
            f"В окне {window} {len(selected)} точек, требуется не меньше {MIN_FIT_POINTS}"
        )

    steps = np.array([entry.j for entry in selected], dtype=float)
    sigmas = np.array([entry.sigma for entry in selected], dtype=float)

    if np.any(sigmas <= 0.0):
        logger.warning("Нулевая ширина распределения в окне %s: показатель не определен", window)
        return ExponentFit(eta=math.nan, fit_window=(j_min, j_max), fitted=False, points=len(selected))

    log_steps, log_sigmas = np.log(steps), np.log(sigmas)
    slope, intercept = np.polyfit(log_steps, log_sigmas, 1)
    residual = float(np.sqrt(np.mean((slope * log_steps + intercept - log_sigmas) ** 2)))

    return ExponentFit(eta=float(slope), fit_window=(j_min, j_max), residual=residual, points=len(selected))

def quantile_radius(rho: np.ndarray, center: float, quantile: float) -> float:
    """
    Наименьшее расстояние от `center`, внутри которого сосредоточена доля `quantile` вероятности.
    """
    distances = np.abs(displacements(rho.size, center))
    order = np.argsort(distances, kind='stable')
    cumulative = np.cumsum(rho[order])
    index = int(np.searchsorted(cumulative, quantile * cumulative[-1] - 1e-12))
    return float(distances[order][min(index, rho.size - 1)])

def front_velocity(walk_run: WalkRun, quantile: float = 0.99, fit_from: int = None) -> float:
    """
    Эмпирическая скорость фронта в узлах за шаг.

    Для каждого снимка вычисляется радиус от начального центра, содержащий долю `quantile`
    вероятности; скорость - наклон радиуса по номеру шага (метод наименьших квадратов).
    Начальный участок до шага `fit_from` (по умолчанию steps // 8) в аппроксимацию не входит.

    Raises:
        ValueError: если quantile вне (0.5, 1).
        InsufficientDataError: если для аппроксимации меньше двух снимков.
        LatticeWrapError: если фронт достиг шва решетки или мог достичь его по границе светового конуса.
    """
    if not 0.5 < quantile < 1.0:
        raise ValueError(f"Квантиль должен лежать в (0.5, 1), получено {quantile}")

    fit_from = walk_run.steps // 8 if fit_from is None else fit_from
    center = circular_centroid(density(walk_run.first))
    half = walk_run.n / 2
    _check_light_cone(walk_run, center)

    steps, radii = [], []
    for snapshot in walk_run.snapshots:
        rho = density(snapshot.field)
        _check_seam(rho, displacements(rho.size, center))
        radius = quantile_radius(rho, center, quantile)
        if radius >= half - 1:
            raise LatticeWrapError(f"Фронт достиг шва решетки на шаге {snapshot.step}")
        if snapshot.step >= fit_from:
            steps.append(snapshot.step)
            radii.append(radius)

    if len(steps) < 2:
        raise InsufficientDataError("Для оценки скорости фронта нужно не меньше двух снимков")

    if radii[-1] - quantile_radius(density(walk_run.first), center, quantile) < MIN_FRONT_TRAVEL:
        logger.debug("Фронт сместился меньше чем на %d узлов для %s", MIN_FRONT_TRAVEL, walk_run.model)

    slope, _ = np.polyfit(np.array(steps, dtype=float), np.array(radii, dtype=float), 1)
    return float(slope)
