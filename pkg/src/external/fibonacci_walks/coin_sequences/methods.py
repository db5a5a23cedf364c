"""
Генерация слов монет для FDTQW-I (рекурсия монет) и FDTQW-II (рекурсия шаговых операторов),
часы Фибоначчи и проверки периодичности.
"""

import logging

from functools import lru_cache

from src.external.fibonacci_walks.coin_sequences.models import CoinWord, FibonacciClock
from src.external.fibonacci_walks.core_types.methods import (
    coin_multiply,
    make_hadamard_coin,
    make_rotation_coin,
)
from src.external.fibonacci_walks.core_types.models import AnglePair, CoinMatrix

logger = logging.getLogger('fibonacci_walks')

PERIOD_TOLERANCE = 1e-12

# Рекурсия доводится до двух полных периодов, дальше слово продолжается периодически
FIB_COIN_RECURSION_DEPTH = 12

FIB_STEP_BLOCK = ('α', 'β', 'α')

def detect_period(coins: list[CoinMatrix], tolerance: float = PERIOD_TOLERANCE) -> int | None:
    """
    Находит наименьший период p, для которого coins[j + p] = coins[j] поэлементно.

    Период засчитывается, только если в последовательности есть хотя бы два полных периода.

    Returns:
        int | None: Период или None, если он не найден.
    """
    total = len(coins)
    for period in range(1, total // 2 + 1):
        if all(coins[j + period].allclose(coins[j], tolerance) for j in range(total - period)):
            return period
    return None

def fib_coin_sequence(angles: AnglePair, count: int) -> CoinWord:
    """
    Монеты FDTQW-I: Ĉ_0 = C(α), Ĉ_1 = C(α)C(β), Ĉ_{j+1} = Ĉ_j Ĉ_{j−1}.

    Матричная рекурсия выполняется на глубину двух периодов. Если период найден,
    остальные монеты берутся периодически, что исключает накопление ошибок округления.

    Args:
        angles (AnglePair): Углы (α, β).
        count (int): Число монет, не меньше 1.

    Returns:
        CoinWord: Слово с обозначениями 'C0'..'C5' и периодом 6 (3 при α = β).
    """
    if count < 1:
        raise ValueError(f"Число монет должно быть не меньше 1, получено {count}")

    coins = [make_hadamard_coin(angles.alpha)]
    coins.append(coin_multiply(coins[0], make_hadamard_coin(angles.beta)))
    while len(coins) < FIB_COIN_RECURSION_DEPTH:
        coins.append(coin_multiply(coins[-1], coins[-2]))

    period = detect_period(coins)
    if period is None:
        logger.warning("Период монет FDTQW-I не обнаружен для %s", angles)
        while len(coins) < count:
            coins.append(coin_multiply(coins[-1], coins[-2]))
        coins = coins[:count]
        return CoinWord(tuple(coins), tuple(f'C{j}' for j in range(count)))

    generated = [coins[j] if j < len(coins) else coins[j % period] for j in range(count)]
    letters = tuple(f'C{j % period}' for j in range(count))
    return CoinWord(tuple(generated), letters, period if count >= period else None)

def closed_form_coin(angles: AnglePair, j: int) -> CoinMatrix:
    """
    Замкнутые формы шести монет FDTQW-I.

    Ĉ₀ = C(α), Ĉ₁ = R(α−β), Ĉ₂ = C(2α−β), Ĉ₃ = C(α), Ĉ₄ = R(β−α), Ĉ₅ = C(β),
    где R - поворот с det = +1.

    Raises:
        ValueError: если j вне диапазона 0..5.
    """
    alpha, beta = angles.as_tuple()
    forms = {
        0: lambda: make_hadamard_coin(alpha),
        1: lambda: make_rotation_coin(alpha - beta),
        2: lambda: make_hadamard_coin(2.0 * alpha - beta),
        3: lambda: make_hadamard_coin(alpha),
        4: lambda: make_rotation_coin(beta - alpha),
        5: lambda: make_hadamard_coin(beta),
    }
    if j not in forms:
        raise ValueError(f"Индекс замкнутой формы должен быть в диапазоне 0..5, получено {j}")
    return forms[j]()

def fib_step_coin_word(angles: AnglePair, translations: int) -> CoinWord:
    """
    Слово монет FDTQW-II в периодическом продолжении τ = 6.

    Раскрытие U_2·U_1·U_0 в порядке применения дает (α, β, α, α, β, α),
    то есть блок (α, β, α), повторенный дважды.

    Args:
        angles (AnglePair): Углы (α, β).
        translations (int): Число трансляций (длина слова), не меньше 1.

    Returns:
        CoinWord: Слово с периодом 3.
    """
    if translations < 1:
        raise ValueError(f"Число трансляций должно быть не меньше 1, получено {translations}")

    block = {'α': make_hadamard_coin(angles.alpha), 'β': make_hadamard_coin(angles.beta)}
    letters = tuple(FIB_STEP_BLOCK[j % len(FIB_STEP_BLOCK)] for j in range(translations))
    period = len(FIB_STEP_BLOCK) if translations >= len(FIB_STEP_BLOCK) else None
    return CoinWord(tuple(block[letter] for letter in letters), letters, period)

@lru_cache(maxsize=64)
def step_operator_letters(j: int) -> tuple[str, ...]:
    """
    Раскрывает шаговый оператор U_j = U_{j−1}U_{j−2} в буквы монет в порядке применения.

    U_0 = TC(α), U_1 = TC(α)TC(β); правый множитель применяется первым,
    поэтому буквы U_j - это буквы U_{j−2}, за которыми следуют буквы U_{j−1}.
    """
    if j < 0:
        raise ValueError(f"Индекс шагового оператора должен быть неотрицательным, получено {j}")
    if j == 0:
        return ('α',)
    if j == 1:
        return ('β', 'α')
    return step_operator_letters(j - 2) + step_operator_letters(j - 1)

def fibonacci_clock(j: int) -> FibonacciClock:
    """
    Часы Фибоначчи: r = Σ_{n=0}^{j−1} F(n), F(0) = 1, F(1) = 2.
    """
    if j < 0:
        raise ValueError(f"Индекс часов должен быть неотрицательным, получено {j}")

    values = [1, 2]
    while len(values) <= j:
        values.append(values[-1] + values[-2])
    values = values[:j + 1]

    return FibonacciClock(j=j, r=sum(values[:j]), F=tuple(values))

def period_product(word: CoinWord, tau: int) -> CoinMatrix:
    """
    Произведение первых `tau` монет слова в порядке применения: C_{τ−1}···C_1 C_0.
    """
    if tau < 1:
        raise ValueError(f"Длина произведения должна быть не меньше 1, получено {tau}")

    product = CoinMatrix.identity()
    for j in range(tau):
        product = coin_multiply(word.coin_at(j), product)
    return product
