"""
Типы наблюдаемых: ряды расплывания, аппроксимация показателя и моменты распределения.
"""

from __future__ import annotations

import math

from dataclasses import dataclass, field

import numpy as np

from src.external.fibonacci_walks.core_types.models import AnglePair, WalkVariant

@dataclass(frozen=True)
class Moments:
    """
    Среднее и стандартное отклонение распределения в узлах решетки.

    mean берется по модулю n; физические значения получаются умножением на dx.
    """
    mean: float
    sigma: float
    dx: float = 1.0

    @property
    def mean_physical(self) -> float:
        return self.mean * self.dx

    @property
    def sigma_physical(self) -> float:
        return self.sigma * self.dx

@dataclass(frozen=True)
class SpreadEntry:
    j: int
    norm: float
    mean: float
    sigma: float

@dataclass
class SpreadSeries:
    """
    Временной ряд нормы, среднего положения и ширины распределения.
    """
    entries: list[SpreadEntry] = field(default_factory=list)
    variant: WalkVariant | None = None
    angles: AnglePair | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def sigmas(self) -> np.ndarray:
        return np.array([entry.sigma for entry in self.entries], dtype=float)

    def norm_drift(self) -> float:
        """Наибольшее отклонение нормы от 1 по ряду."""
        return max((abs(entry.norm - 1.0) for entry in self.entries), default=0.0)

@dataclass(frozen=True)
class ExponentFit:
    """
    Показатель η в σ_j ~ j^η по методу наименьших квадратов в логарифмическом масштабе.

    Attributes:
        eta (float): Наклон; nan, если аппроксимация не выполнена.
        fit_window (tuple[int, int]): Окно (j_min, j_max).
        residual (float): Среднеквадратичная невязка log-log аппроксимации.
        fitted (bool): False для рядов с нулевой шириной (нулевая скорость).
        points (int): Число точек в окне.
    """
    eta: float
    fit_window: tuple[int, int]
    residual: float = 0.0
    fitted: bool = True
    points: int = 0

    def within(self, low: float, high: float) -> bool:
        return self.fitted and not math.isnan(self.eta) and low <= self.eta <= high
