"""
Шестишаговый шаблон: замкнутые формы коэффициентов для FDTQW-I и FDTQW-II,
численный оракул и применение шаблона к состоянию.
"""

import logging

import numpy as np

from src.external.fibonacci_walks.coin_sequences.methods import fib_coin_sequence, fib_step_coin_word
from src.external.fibonacci_walks.core_types.methods import apply_coin, apply_translation
from src.external.fibonacci_walks.core_types.models import AnglePair, SpinorField, WalkModel, WalkVariant
from src.external.fibonacci_walks.exceptions import LatticeTooSmallError
from src.external.fibonacci_walks.stencil.models import OFFSETS, StencilCoefficients

logger = logging.getLogger('fibonacci_walks')

STENCIL_STEPS = 6

MIN_STENCIL_SIZE = 14

MIN_ORACLE_SIZE = 16

ORACLE_SIZE = 32

def _variant_of(model) -> WalkVariant:
    variant = model.variant if isinstance(model, WalkModel) else WalkVariant(model)
    if not variant.is_fibonacci:
        raise ValueError(f"Шаблон определен только для фибоначчиевых моделей, получено {variant.value}")
    return variant

def _fib_coin_u_row(alpha: float, beta: float) -> tuple[dict[int, float], dict[int, float]]:
    c, s = np.cos, np.sin
    a, b = alpha, beta

    A = {
        -6: c(a) ** 2 * c(b) * c(a - b) ** 2 * c(2 * a - b),
        -4: -0.25 * c(a) * c(a - b) ** 2 * (c(a - 2 * b) + 3 * c(3 * a - 2 * b) - 5 * c(a) + c(3 * a)),
        -2: (-6 * c(2 * (a - b)) + 4 * c(4 * (a - b)) - c(2 * (a + b)) - c(2 * (a - 2 * b))
             + 2 * c(4 * a - 2 * b) - c(6 * a - 2 * b) + c(6 * a - 4 * b) - 2 * c(4 * a)
             - 2 * c(2 * b) + 6) / 16,
        0: 0.25 * c(a - b) ** 2 * (-6 * c(2 * (a - b)) + c(4 * a - 2 * b) - 2 * c(2 * a)
                                   + c(4 * a) + c(2 * b) + 5),
        2: c(a - b) ** 2 * (6 * c(2 * (a - b)) - 3 * c(4 * a - 2 * b) - 2 * c(2 * a)
                            + c(4 * a) + c(2 * b) - 3) / 8,
        4: 0.5 * s(2 * a) * s(b) * c(a - b) ** 2 * c(2 * a - b),
        6: 0.0,
    }
    B = {
        -6: 0.5 * s(2 * a) * c(b) * c(a - b) ** 2 * c(2 * a - b),
        -4: (s(2 * a) * s(b) * (s(b) - s(4 * a - 3 * b))
             + c(b) * (3 * s(2 * a - b) - s(4 * a - b) + 3 * s(4 * a - 3 * b) - s(6 * a - 3 * b))) / 8,
        -2: ((c(2 * a) - 3) * s(4 * a - 4 * b) - 2 * s(4 * a) * c(a - b) ** 2) / 8,
        0: (-s(2 * a - 4 * b) + 4 * s(4 * a - 4 * b) + s(6 * a - 4 * b)
            + 2 * c(a) * (s(a + 2 * b) - s(a - 2 * b) - 3 * s(3 * a - 2 * b) + s(5 * a - 2 * b))
            - 2 * s(2 * a) + 2 * s(4 * a)) / 16,
        2: -c(a) * (s(3 * a - 4 * b) + 3 * s(5 * a - 4 * b) + 8 * s(a) ** 3 * c(2 * a - 2 * b)
                    + 4 * s(a) - 2 * s(3 * a)) / 16,
        4: -(c(a) ** 2) * s(b) * c(a - b) ** 2 * c(2 * a - b),
        6: 0.0,
    }
    return A, B

def _fib_step_u_row(alpha: float, beta: float) -> tuple[dict[int, float], dict[int, float]]:
    c, s = np.cos, np.sin
    a, b = alpha, beta

    A = {
        -6: c(a) ** 4 * c(b) ** 2,
        -4: c(a) ** 2 * s(a) * (c(b) ** 2 * s(a) + 2 * c(a) * s(2 * b)),
        -2: -s(2 * a) * (-2 * s(2 * a) + s(2 * (a - b)) + 5 * s(2 * (a + b))) / 8,
        # Положительный знак: сумма A по смещениям равна 1 (произведение шести монет - единица)
        0: (3 + c(4 * a) - (1 + 3 * c(4 * a)) * c(2 * b) - 16 * c(a) * s(a) ** 3 * s(2 * b)) / 8,
        2: c(b) ** 2 * s(a) ** 4 - 2 * c(a) ** 3 * c(b) * s(a) * s(b) + c(a) * s(a) ** 3 * s(2 * b),
        4: c(a) ** 2 * c(b) ** 2 * s(a) ** 2,
        6: 0.0,
    }
    B = {
        -6: c(a) ** 3 * c(b) ** 2 * s(a),
        -4: c(a) * c(b) * (s(a) ** 3 * c(b) + c(a) * (1 - 2 * c(2 * a)) * s(b)),
        -2: (s(4 * a) * (3 * c(2 * b) - 1) - 4 * s(a) ** 2 * (2 * c(2 * a) + 1) * s(2 * b)) / 8,
        0: (4 * s(a) ** 2 * (2 * c(2 * a) + 1) * s(2 * b) + s(4 * a) * (1 - 3 * c(2 * b))) / 8,
        2: c(a) * c(b) * (c(a) * (2 * c(2 * a) - 1) * s(b) - s(a) ** 3 * c(b)),
        4: -s(a) * c(a) ** 3 * c(b) ** 2,
        6: 0.0,
    }
    return A, B

_U_ROWS = {
    WalkVariant.FIB_COIN: _fib_coin_u_row,
    WalkVariant.FIB_STEP: _fib_step_u_row,
}

def closed_form_coefficients(model, angles: AnglePair) -> StencilCoefficients:
    """
    Вычисляет таблицы A_{2k}, B_{2k} в замкнутой форме и нижнюю строку по симметрии (−α, −β).

    Args:
        model (WalkModel | WalkVariant | str): Фибоначчиева модель.
        angles (AnglePair): Углы (α, β).

    Returns:
        StencilCoefficients: Все четыре таблицы.
    """
    variant = _variant_of(model)
    u_row = _U_ROWS[variant]

    A, B = u_row(angles.alpha, angles.beta)
    A_neg, B_neg = u_row(-angles.alpha, -angles.beta)

    C = {offset: float(B_neg[-offset]) for offset in OFFSETS}
    D = {offset: float(A_neg[-offset]) for offset in OFFSETS}

    return StencilCoefficients(
        variant=variant,
        angles=angles,
        A={offset: float(value) for offset, value in A.items()},
        B={offset: float(value) for offset, value in B.items()},
        C=C,
        D=D,
    )

def oracle_coefficients(model, angles: AnglePair, n: int = ORACLE_SIZE) -> StencilCoefficients:
    """
    Извлекает таблицы шаблона прямой композицией шести шагов (TĈ_j).

    Эволюционирует базисные состояния δ_{m₀}⊗b_u и δ_{m₀}⊗b_d и читает отклики
    на смещениях −6..6: коэффициент при смещении o равен амплитуде в узле m₀ − o.

    Args:
        model (WalkModel | WalkVariant | str): Фибоначчиева модель.
        angles (AnglePair): Углы (α, β).
        n (int): Размер вспомогательной решетки, не меньше 16.

    Returns:
        StencilCoefficients: Извлеченные таблицы.

    Raises:
        LatticeTooSmallError: если n < 16.
    """
    variant = _variant_of(model)
    if n < MIN_ORACLE_SIZE:
        raise LatticeTooSmallError(f"Решетка оракула должна содержать не меньше {MIN_ORACLE_SIZE} узлов, получено {n}")

    if variant is WalkVariant.FIB_COIN:
        word = fib_coin_sequence(angles, STENCIL_STEPS)
    else:
        word = fib_step_coin_word(angles, STENCIL_STEPS)

    origin = n // 2
    responses = {}
    for component, spinor in (('u', (1.0, 0.0)), ('d', (0.0, 1.0))):
        field = SpinorField.delta(n, origin, spinor)
        for j in range(STENCIL_STEPS):
            field = apply_translation(apply_coin(field, word.coin_at(j)))
        responses[component] = field

    def read(amplitudes: np.ndarray, offset: int) -> float:
        return float(np.real(amplitudes[(origin - offset) % n]))

    from_u, from_d = responses['u'], responses['d']
    odd_offsets = range(-STENCIL_STEPS + 1, STENCIL_STEPS, 2)
    residual = max(
        float(np.abs(amplitudes[(origin - offset) % n]))
        for amplitudes in (from_u.u, from_u.d, from_d.u, from_d.d)
        for offset in odd_offsets
    )

    return StencilCoefficients(
        variant=variant,
        angles=angles,
        A={offset: read(from_u.u, offset) for offset in OFFSETS},
        B={offset: read(from_d.u, offset) for offset in OFFSETS},
        C={offset: read(from_u.d, offset) for offset in OFFSETS},
        D={offset: read(from_d.d, offset) for offset in OFFSETS},
        off_lattice_residual=residual,
    )

def apply_stencil(field: SpinorField, coeffs: StencilCoefficients) -> SpinorField:
    """
    Продвигает состояние на шесть шагов шаблоном шириной 13 узлов.

    u_out[m] = Σ_o A[o]·u[m+o] + B[o]·d[m+o], d_out[m] = Σ_o C[o]·u[m+o] + D[o]·d[m+o].

    Raises:
        LatticeTooSmallError: если n < 14.
    """
    if field.n < MIN_STENCIL_SIZE:
        raise LatticeTooSmallError(f"Шаблон требует решетку не меньше {MIN_STENCIL_SIZE} узлов, получено {field.n}")

    u_out = np.zeros_like(field.u)
    d_out = np.zeros_like(field.d)
    for offset in OFFSETS:
        u_shifted = np.roll(field.u, -offset)
        d_shifted = np.roll(field.d, -offset)
        u_out += coeffs.A[offset] * u_shifted + coeffs.B[offset] * d_shifted
        d_out += coeffs.C[offset] * u_shifted + coeffs.D[offset] * d_shifted

    return SpinorField(u_out, d_out, field.dx)

def symbol_matrix(coeffs: StencilCoefficients, q: float) -> np.ndarray:
    """
    Символ шаблона в импульсном пространстве для плоской волны e^{iqm}.

    Returns:
        np.ndarray: Комплексная матрица 2×2.
    """
    phases = {offset: np.exp(1j * q * offset) for offset in OFFSETS}
    return np.array([
        [sum(coeffs.A[o] * phases[o] for o in OFFSETS), sum(coeffs.B[o] * phases[o] for o in OFFSETS)],
        [sum(coeffs.C[o] * phases[o] for o in OFFSETS), sum(coeffs.D[o] * phases[o] for o in OFFSETS)],
    ], dtype=np.complex128)

def symbol_unitarity_defect(coeffs: StencilCoefficients, wavenumbers) -> float:
    """Наибольшее отклонение S(q)†S(q) от единицы по набору волновых чисел."""
    defect = 0.0
    for q in np.atleast_1d(wavenumbers):
        symbol = symbol_matrix(coeffs, float(q))
        defect = max(defect, float(np.max(np.abs(symbol.conj().T @ symbol - np.eye(2)))))
    return defect

def first_moments(coeffs: StencilCoefficients) -> tuple[float, float]:
    """
    Первые моменты верхней строки: (Σ (o/6)·A[o], Σ (o/6)·B[o]).
    """
    p1 = sum(offset / STENCIL_STEPS * coeffs.A[offset] for offset in OFFSETS)
    p2 = sum(offset / STENCIL_STEPS * coeffs.B[offset] for offset in OFFSETS)
    return float(p1), float(p2)
