"""
Типы последовательностей монет и часов Фибоначчи.
"""

from __future__ import annotations

from dataclasses import dataclass

from src.external.fibonacci_walks.core_types.models import CoinMatrix

@dataclass(frozen=True)
class CoinWord:
    """
    Слово монет в порядке применения (coins[0] применяется первой).

    Attributes:
        coins (tuple[CoinMatrix, ...]): Сгенерированные монеты.
        letters (tuple[str, ...]): Обозначения монет, например 'α', 'β' или 'C3'.
        period (int | None): Период слова; при наличии coin_at(j) = coins[j mod period].
    """
    coins: tuple[CoinMatrix, ...]
    letters: tuple[str, ...]
    period: int | None = None

    def __post_init__(self):
        if len(self.coins) != len(self.letters):
            raise ValueError("Число монет и число обозначений не совпадают")
        if not self.coins:
            raise ValueError("Слово монет не может быть пустым")
        if self.period is not None and not 1 <= self.period <= len(self.coins):
            raise ValueError(f"Недопустимый период слова: {self.period}")

    def __len__(self) -> int:
        return len(self.coins)

    def coin_at(self, j: int) -> CoinMatrix:
        if self.period is not None:
            return self.coins[j % self.period]
        return self.coins[j]

    def letter_at(self, j: int) -> str:
        if self.period is not None:
            return self.letters[j % self.period]
        return self.letters[j]

    def prefix(self, count: int) -> list[str]:
        """Первые `count` обозначений слова, фактически применяемых движком."""
        if self.period is None:
            count = min(count, len(self.letters))
        return [self.letter_at(j) for j in range(count)]

@dataclass(frozen=True)
class FibonacciClock:
    """
    Часы FDTQW-II: число трансляций r после j шаговых операторов.

    Attributes:
        j (int): Индекс шагового оператора.
        r (int): Σ_{n=0}^{j−1} F(n).
        F (tuple[int, ...]): Значения F(0), ..., F(j) при F(0)=1, F(1)=2.
    """
    j: int
    r: int
    F: tuple[int, ...]

    def time(self, dt: float) -> float:
        """Физическое время r·Δt."""
        return self.r * dt
