"""
Коэффициенты шестишагового шаблона.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from src.external.fibonacci_walks.core_types.models import AnglePair, WalkVariant

# Смещения 2k, k = −3..3
OFFSETS = (-6, -4, -2, 0, 2, 4, 6)

@dataclass(frozen=True)
class StencilCoefficients:
    """
    Таблицы коэффициентов шестишагового отображения.

    u_{m,j+6} = Σ A[o]·u_{m+o,j} + B[o]·d_{m+o,j},
    d_{m,j+6} = Σ C[o]·u_{m+o,j} + D[o]·d_{m+o,j}.

    В замкнутой форме нижняя строка получается отражением смещений верхней строки
    при углах (−α, −β): C[o] = B[−o](−α, −β), D[o] = A[−o](−α, −β).

    Attributes:
        variant (WalkVariant): FIB_COIN или FIB_STEP.
        angles (AnglePair): Углы (α, β).
        A, B, C, D (dict[int, float]): Коэффициенты по смещениям OFFSETS.
        off_lattice_residual (float): Наибольшая амплитуда на нечетных смещениях (только у оракула).
    """
    variant: WalkVariant
    angles: AnglePair
    A: dict[int, float]
    B: dict[int, float]
    C: dict[int, float]
    D: dict[int, float]
    off_lattice_residual: float = field(default=0.0)

    def rows(self) -> dict[str, dict[int, float]]:
        return {'A': self.A, 'B': self.B, 'C': self.C, 'D': self.D}

    def max_discrepancy(self, other: StencilCoefficients) -> float:
        """Наибольшая поэлементная разность двух наборов таблиц."""
        return max(
            abs(table[offset] - other.rows()[name][offset])
            for name, table in self.rows().items()
            for offset in OFFSETS
        )
