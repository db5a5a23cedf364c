"""
Базовые типы состояний и операторов квантового блуждания.

Модели не связаны с базой данных: это неизменяемые значения (углы, монеты, модель блуждания)
и спинорное поле, которое может обновляться только своим владельцем.
"""

from __future__ import annotations

import math

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

TWO_PI = 2.0 * math.pi

UNITARITY_TOLERANCE = 1e-12

def _reduce_angle(value: float) -> float:
    reduced = math.fmod(float(value), TWO_PI)
    if reduced < 0.0:
        reduced += TWO_PI
    # fmod отрицательного нуля и округление у верхней границы
    if reduced >= TWO_PI:
        reduced = 0.0
    return reduced + 0.0

@dataclass(frozen=True)
class AnglePair:
    """
    Пара углов (α, β) обобщенных монет Адамара C(α), C(β).

    Углы приводятся к интервалу [0, 2π) при создании.

    Raises:
        ValueError: если один из углов не является конечным числом.
    """
    alpha: float
    beta: float

    def __post_init__(self):
        for name in ('alpha', 'beta'):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"Угол {name} должен быть конечным числом, получено {value!r}")
            object.__setattr__(self, name, _reduce_angle(value))

    def negated(self) -> AnglePair:
        """Возвращает пару (−α, −β), используемую для нижней строки шаблона."""
        return AnglePair(-self.alpha, -self.beta)

    def as_tuple(self) -> tuple[float, float]:
        return self.alpha, self.beta

def _unitarity_defect(entries: np.ndarray) -> float:
    return float(np.max(np.abs(entries.conj().T @ entries - np.eye(2))))

@dataclass(frozen=True, eq=False)
class CoinMatrix:
    """
    Монета - комплексная унитарная матрица 2×2.

    Attributes:
        entries (np.ndarray): Элементы матрицы (c00, c01; c10, c11), dtype complex128.

    Raises:
        ValueError: если форма не 2×2 или C†C отличается от I больше чем на 1e-12 поэлементно.
    """
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=np.complex128)
        if entries.shape != (2, 2):
            raise ValueError(f"Монета должна быть матрицей 2×2, получена форма {entries.shape}")
        defect = _unitarity_defect(entries)
        if defect > UNITARITY_TOLERANCE:
            raise ValueError(f"Монета не унитарна: max|C†C − I| = {defect:.3e}")
        entries.setflags(write=False)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def identity(cls) -> CoinMatrix:
        return cls(np.eye(2))

    @property
    def det(self) -> complex:
        return complex(np.linalg.det(self.entries))

    def is_unitary(self, tolerance: float = UNITARITY_TOLERANCE) -> bool:
        return _unitarity_defect(self.entries) <= tolerance

    def allclose(self, other: CoinMatrix, tolerance: float = 1e-12) -> bool:
        return bool(np.max(np.abs(self.entries - other.entries)) < tolerance)

    def __matmul__(self, other: CoinMatrix) -> CoinMatrix:
        return CoinMatrix(self.entries @ other.entries)

@dataclass(eq=False)
class SpinorField:
    """
    Состояние блуждателя Ψ_m = u_m b_u + d_m b_d на периодической решетке из n узлов.

    Attributes:
        u (np.ndarray): Амплитуды верхней компоненты (переносится в +x).
        d (np.ndarray): Амплитуды нижней компоненты (переносится в −x).
        dx (float): Шаг решетки, по умолчанию 2π/n.
    """
    u: np.ndarray
    d: np.ndarray
    dx: float = field(default=None)

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=np.complex128)
        self.d = np.asarray(self.d, dtype=np.complex128)

        if self.u.ndim != 1 or self.u.shape != self.d.shape:
            raise ValueError("Компоненты u и d должны быть одномерными массивами одинаковой длины")
        if self.u.size < 2:
            raise ValueError(f"Решетка должна содержать не менее 2 узлов, получено {self.u.size}")

        if self.dx is None:
            self.dx = TWO_PI / self.u.size
        if not self.dx > 0.0:
            raise ValueError(f"Шаг решетки должен быть положительным, получено {self.dx}")

    @property
    def n(self) -> int:
        return int(self.u.size)

    @classmethod
    def zeros(cls, n: int, dx: float = None) -> SpinorField:
        return cls(np.zeros(n, dtype=np.complex128), np.zeros(n, dtype=np.complex128), dx)

    @classmethod
    def delta(cls, n: int, site: int, spinor: tuple[complex, complex] = (1.0, 0.0),
              dx: float = None) -> SpinorField:
        """
        Создает состояние, сосредоточенное в одном узле.

        Args:
            n (int): Размер решетки.
            site (int): Номер узла (берется по модулю n).
            spinor (tuple): Спинор (u, d) в узле; нормируется.
            dx (float, optional): Шаг решетки.

        Returns:
            SpinorField: Нормированное состояние.
        """
        spinor = np.asarray(spinor, dtype=np.complex128)
        norm = np.linalg.norm(spinor)
        if norm == 0.0:
            raise ValueError("Спинор начального состояния не может быть нулевым")

        state = cls.zeros(n, dx)
        state.u[site % n] = spinor[0] / norm
        state.d[site % n] = spinor[1] / norm
        return state

    @classmethod
    def gaussian(cls, n: int, width_sites: float, center: float = None,
                 spinor: tuple[complex, complex] = (1.0, 1.0j), dx: float = None) -> SpinorField:
        """
        Создает гауссов волновой пакет √N₀(x)·(s_u b_u + s_d b_d).

        Огибающая амплитуды exp(−(m − m₀)²/(2w²)), поэтому плотность имеет ширину w/√2.

        Args:
            n (int): Размер решетки.
            width_sites (float): Ширина w в узлах решетки (не меньше 1).
            center (float, optional): Центр пакета m₀, по умолчанию n // 2.
            spinor (tuple): Внутренний спинор, по умолчанию (1, i)/√2.
            dx (float, optional): Шаг решетки.

        Returns:
            SpinorField: Нормированное состояние.
        """
        if width_sites < 1.0:
            raise ValueError(f"Ширина гауссова пакета должна быть не меньше 1 узла, получено {width_sites}")

        center = n // 2 if center is None else center
        spinor = np.asarray(spinor, dtype=np.complex128)
        spinor = spinor / np.linalg.norm(spinor)

        sites = np.arange(n)
        envelope = np.exp(-((sites - center) ** 2) / (2.0 * width_sites ** 2))
        envelope = envelope / np.sqrt(np.sum(envelope ** 2))

        return cls(spinor[0] * envelope, spinor[1] * envelope, dx)

    def norm(self) -> float:
        """Возвращает Σ_m (|u_m|² + |d_m|²)."""
        return float(np.sum(np.abs(self.u) ** 2) + np.sum(np.abs(self.d) ** 2))

    def normalized(self) -> SpinorField:
        total = self.norm()
        if total == 0.0:
            raise ValueError("Нулевое состояние нельзя нормировать")
        scale = 1.0 / math.sqrt(total)
        return SpinorField(self.u * scale, self.d * scale, self.dx)

    def copy(self) -> SpinorField:
        return SpinorField(self.u.copy(), self.d.copy(), self.dx)

    def max_difference(self, other: SpinorField) -> float:
        """Максимальная по модулю разность амплитуд двух состояний."""
        return float(max(np.max(np.abs(self.u - other.u)), np.max(np.abs(self.d - other.d))))

    def __add__(self, other: SpinorField) -> SpinorField:
        return SpinorField(self.u + other.u, self.d + other.d, self.dx)

    def __mul__(self, scalar: complex) -> SpinorField:
        return SpinorField(self.u * scalar, self.d * scalar, self.dx)

    __rmul__ = __mul__

class WalkVariant(str, Enum):
    STANDARD = 'standard'
    FIB_COIN = 'fib-coin'
    FIB_STEP = 'fib-step'

    @property
    def is_fibonacci(self) -> bool:
        return self is not WalkVariant.STANDARD

@dataclass(frozen=True)
class WalkModel:
    """
    Модель блуждания: стандартная (постоянная монета C(θ)), FDTQW-I или FDTQW-II.

    Для стандартной модели обе компоненты `angles` равны θ.
    """
    variant: WalkVariant
    angles: AnglePair

    def __post_init__(self):
        object.__setattr__(self, 'variant', WalkVariant(self.variant))

    @classmethod
    def standard(cls, theta: float) -> WalkModel:
        return cls(WalkVariant.STANDARD, AnglePair(theta, theta))

    @classmethod
    def fib_coin(cls, alpha: float, beta: float) -> WalkModel:
        return cls(WalkVariant.FIB_COIN, AnglePair(alpha, beta))

    @classmethod
    def fib_step(cls, alpha: float, beta: float) -> WalkModel:
        return cls(WalkVariant.FIB_STEP, AnglePair(alpha, beta))

    @classmethod
    def from_name(cls, name: str, alpha: float, beta: float) -> WalkModel:
        variant = WalkVariant(name)
        if variant is WalkVariant.STANDARD:
            return cls.standard(alpha)
        return cls(variant, AnglePair(alpha, beta))

    @property
    def theta(self) -> float:
        return self.angles.alpha

    def __str__(self) -> str:
        if self.variant is WalkVariant.STANDARD:
            return f"{self.variant.value}(θ={self.theta:.6g})"
        return f"{self.variant.value}(α={self.angles.alpha:.6g}, β={self.angles.beta:.6g})"
