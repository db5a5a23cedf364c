"""
Параметры непрерывного предела и отчет о ковариантной форме.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from src.external.fibonacci_walks.core_types.models import AnglePair, WalkVariant

@dataclass(frozen=True, eq=False)
class DiagonalBasis:
    """
    Собственный базис матрицы P = [[p1, p2], [p2, −p1]].

    Attributes:
        up (np.ndarray): Единичный вектор собственного значения +ω.
        down (np.ndarray): Единичный вектор собственного значения −ω.
        degenerate (bool): p2 ≈ 0 или ω ≈ 0, используется стандартный базис.
        velocity_zero (bool): ω ≈ 0, перенос отсутствует.
    """
    up: np.ndarray
    down: np.ndarray
    degenerate: bool = False
    velocity_zero: bool = False

    def matrix(self) -> np.ndarray:
        """Матрица со столбцами (up, down)."""
        return np.column_stack((self.up, self.down))

@dataclass(frozen=True, eq=False)
class ContinuumParams:
    """
    Уравнение переноса непрерывного предела и его диагонализация.

    Attributes:
        variant (WalkVariant): Фибоначчиева модель.
        angles (AnglePair): Углы (α, β).
        p1, p2 (float): Коэффициенты переноса.
        omega (float): √(p1² + p2²).
        v (float): Аналитическая скорость распространения.
        basis (DiagonalBasis): Собственный базис P.
    """
    variant: WalkVariant
    angles: AnglePair
    p1: float
    p2: float
    omega: float
    v: float
    basis: DiagonalBasis

    @property
    def basis_up(self) -> np.ndarray:
        return self.basis.up

    @property
    def basis_down(self) -> np.ndarray:
        return self.basis.down

    @property
    def transport_matrix(self) -> np.ndarray:
        return np.array([[self.p1, self.p2], [self.p2, -self.p1]])

@dataclass
class CovariantReport:
    passed: bool
    skipped: bool = False
    residuals: dict[str, float] = field(default_factory=dict)
