"""
Операции над монетами и спинорными полями: монета Адамара, произведение монет,
применение монеты и киральный сдвиг.
"""

import numpy as np

from src.external.fibonacci_walks.core_types.models import CoinMatrix, SpinorField

def make_hadamard_coin(theta: float) -> CoinMatrix:
    """
    Обобщенная монета Адамара C(θ) = [[cos θ, sin θ], [sin θ, −cos θ]].

    Монета вещественная, инволютивная (C² = I) и имеет det C = −1.
    """
    c, s = np.cos(theta), np.sin(theta)
    return CoinMatrix(np.array([[c, s], [s, -c]]))

def make_rotation_coin(phi: float) -> CoinMatrix:
    """Поворот R(φ) = [[cos φ, −sin φ], [sin φ, cos φ]], det R = +1."""
    c, s = np.cos(phi), np.sin(phi)
    return CoinMatrix(np.array([[c, -s], [s, c]]))

def coin_multiply(a: CoinMatrix, b: CoinMatrix) -> CoinMatrix:
    """Матричное произведение a·b (сначала действует b)."""
    return a @ b

def apply_coin(field: SpinorField, coin: CoinMatrix) -> SpinorField:
    """
    Применяет монету в каждом узле: (u′, d′) = C·(u, d).

    Args:
        field (SpinorField): Исходное состояние.
        coin (CoinMatrix): Монета.

    Returns:
        SpinorField: Новое состояние, исходное не изменяется.
    """
    (c00, c01), (c10, c11) = coin.entries
    return SpinorField(c00 * field.u + c01 * field.d, c10 * field.u + c11 * field.d, field.dx)

def apply_translation(field: SpinorField) -> SpinorField:
    """
    Киральный сдвиг: u[m] ← u[m−1], d[m] ← d[m+1].

    Верхняя компонента переносится на узел вправо, нижняя на узел влево.
    """
    return SpinorField(np.roll(field.u, 1), np.roll(field.d, -1), field.dx)

def apply_inverse_translation(field: SpinorField) -> SpinorField:
    return SpinorField(np.roll(field.u, -1), np.roll(field.d, 1), field.dx)
