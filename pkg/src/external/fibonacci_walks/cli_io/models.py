"""
Конфигурации прогонов и отчеты команд управления.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import pandas as pd

from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant
from src.external.fibonacci_walks.stencil.models import StencilCoefficients

# Внутренний спинор гауссова пакета: (b_u + i·b_d)/√2
GAUSSIAN_SPINOR = (1.0, 1.0j)

DELTA_SPINOR = (1.0, 0.0)

@dataclass(frozen=True)
class RunConfig:
    """
    Параметры одного прогона блуждания.

    Attributes:
        model (WalkVariant): Модель; для стандартной модели θ = alpha.
        alpha, beta (float): Углы в радианах.
        size (int): Размер решетки n.
        steps (int): Число трансляций.
        init (str): 'gaussian' или 'delta'.
        width (float): Ширина гауссова пакета в узлах.
        site (int | None): Узел дельта-состояния или центр пакета, по умолчанию n // 2.
        snapshot_stride (int): Шаг записи снимков.
        seed (int): Зарезервировано; блуждания детерминированы.
        output_dir (str): Директория результатов.
        plot (bool): Сохранять SVG-рисунок.
        fit_window (tuple[int, int]): Окно подгонки показателя расплывания.
        front_quantile (float): Квантиль для скорости фронта.
    """
    model: WalkVariant
    alpha: float
    beta: float
    size: int
    steps: int
    init: str = 'gaussian'
    width: float = 20.0
    site: int | None = None
    snapshot_stride: int = 8
    seed: int = 0
    output_dir: str = 'results'
    plot: bool = False
    fit_window: tuple[int, int] = (100, 800)
    front_quantile: float = 0.99

    def walk_model(self) -> WalkModel:
        return WalkModel.from_name(self.model.value, self.alpha, self.beta)

    @property
    def origin(self) -> int:
        return self.size // 2 if self.site is None else self.site

    def initial_field(self) -> SpinorField:
        if self.init == 'delta':
            return SpinorField.delta(self.size, self.origin, DELTA_SPINOR)
        return SpinorField.gaussian(self.size, self.width, center=self.origin, spinor=GAUSSIAN_SPINOR)

    def initial_description(self) -> str:
        if self.init == 'delta':
            return f"delta(site={self.origin})"
        return f"gaussian(width={self.width:g}, center={self.origin})"

    def echo(self) -> dict:
        """Параметры прогона для summary.json."""
        return {
            'model': self.model.value,
            'alpha': self.alpha,
            'beta': self.beta,
            'size': self.size,
            'steps': self.steps,
            'init': self.init,
            'width': self.width,
            'site': self.origin,
            'snapshot_stride': self.snapshot_stride,
            'seed': self.seed,
            'fit_window': list(self.fit_window),
            'front_quantile': self.front_quantile,
        }

@dataclass(frozen=True)
class SweepConfig:
    model: WalkVariant
    resolution: int
    empirical: bool = False
    size: int = 512
    steps: int = 120
    backend: str = 'local'
    output_dir: str = 'results'
    plot: bool = False

@dataclass(frozen=True)
class DiracCompareConfig:
    model: WalkVariant
    alpha: float
    beta: float
    resolutions: tuple[int, ...] = field(default=(512, 1024, 2048, 4096))
    time: float = 0.0
    width: float = 0.0
    output_dir: str = 'results'

    def walk_model(self) -> WalkModel:
        return WalkModel.from_name(self.model.value, self.alpha, self.beta)

@dataclass(frozen=True)
class StencilConfig:
    model: WalkVariant
    alpha: float
    beta: float
    size: int = 32
    output_dir: str | None = None

    @property
    def angles(self) -> AnglePair:
        return AnglePair(self.alpha, self.beta)

@dataclass(frozen=True, eq=False)
class StencilReport:
    closed: StencilCoefficients
    oracle: StencilCoefficients
    discrepancy: float
    table: pd.DataFrame

@dataclass(frozen=True, eq=False)
class ConvergenceReport:
    """
    Результат сравнения с решением Дирака.

    Attributes:
        table (pd.DataFrame): Столбцы n, L1_distance.
        decreasing (bool): L1 строго убывает с ростом n.
        informational (bool): Сравнение не проверяется (нулевая скорость или нулевое время).
    """
    table: pd.DataFrame
    decreasing: bool
    informational: bool = False

    @property
    def passed(self) -> bool:
        return self.informational or self.decreasing
