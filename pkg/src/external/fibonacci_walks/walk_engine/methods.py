"""
Пошаговая эволюция блуждания и стробоскопические прогоны.
"""

import logging

from src.external.fibonacci_walks.coin_sequences.methods import (
    FIB_COIN_RECURSION_DEPTH,
    fib_coin_sequence,
    fib_step_coin_word,
)
from src.external.fibonacci_walks.coin_sequences.models import CoinWord
from src.external.fibonacci_walks.core_types.methods import (
    apply_coin,
    apply_translation,
    make_hadamard_coin,
)
from src.external.fibonacci_walks.core_types.models import (
    CoinMatrix,
    SpinorField,
    WalkModel,
    WalkVariant,
)
from src.external.fibonacci_walks.stencil.methods import apply_stencil, closed_form_coefficients
from src.external.fibonacci_walks.walk_engine.models import Snapshot, WalkRun

logger = logging.getLogger('fibonacci_walks')

NORM_TOLERANCE = 1e-10

STROBOSCOPE_PERIOD = 6

WORD_PREFIX_LENGTH = 12

def step(field: SpinorField, coin: CoinMatrix) -> SpinorField:
    """Один шаг эволюции: монета, затем киральный сдвиг."""
    return apply_translation(apply_coin(field, coin))

def coin_word_for(model: WalkModel, steps: int) -> CoinWord:
    """
    Возвращает слово монет модели, покрывающее `steps` трансляций.

    Args:
        model (WalkModel): Модель блуждания.
        steps (int): Число трансляций.

    Returns:
        CoinWord: Слово монет; для периодических слов хранится один период.
    """
    if model.variant is WalkVariant.STANDARD:
        return CoinWord((make_hadamard_coin(model.theta),), ('θ',), period=1)
    if model.variant is WalkVariant.FIB_COIN:
        return fib_coin_sequence(model.angles, max(steps, FIB_COIN_RECURSION_DEPTH))
    return fib_step_coin_word(model.angles, max(steps, STROBOSCOPE_PERIOD))

def _check_norm(model: WalkModel, initial: SpinorField, final: SpinorField, steps: int) -> None:
    drift = abs(final.norm() - initial.norm())
    if drift > NORM_TOLERANCE:
        logger.warning("Дрейф нормы %.3e после %d шагов для %s", drift, steps, model)

def run(model: WalkModel, initial: SpinorField, steps: int, snapshot_stride: int = 1,
        initial_description: str = '') -> WalkRun:
    """
    Выполняет `steps` шагов блуждания со словом монет модели.

    Снимки сохраняются для шага 0, для каждого кратного `snapshot_stride` шага и для последнего шага.

    Args:
        model (WalkModel): Модель блуждания.
        initial (SpinorField): Начальное состояние.
        steps (int): Число трансляций, не меньше 1.
        snapshot_stride (int): Шаг записи снимков, положительный.
        initial_description (str): Описание начального условия для отчета.

    Returns:
        WalkRun: История прогона.

    Raises:
        ValueError: если steps < 1 или snapshot_stride <= 0.
    """
    if snapshot_stride <= 0:
        raise ValueError(f"Шаг записи снимков должен быть положительным, получено {snapshot_stride}")
    if steps < 1:
        raise ValueError(f"Число шагов должно быть не меньше 1, получено {steps}")

    word = coin_word_for(model, steps)
    logger.debug("Прогон %s: n=%d, шагов=%d, шаг снимков=%d", model, initial.n, steps, snapshot_stride)

    field = initial.copy()
    snapshots = [Snapshot(0, field)]
    for j in range(steps):
        field = step(field, word.coin_at(j))
        if (j + 1) % snapshot_stride == 0 or j + 1 == steps:
            snapshots.append(Snapshot(j + 1, field))

    _check_norm(model, initial, field, steps)

    return WalkRun(
        model=model,
        n=initial.n,
        steps=steps,
        snapshots=snapshots,
        initial=initial_description,
        word_prefix=word.prefix(min(WORD_PREFIX_LENGTH, steps)),
    )

def run_stroboscopic(model: WalkModel, initial: SpinorField, six_step_count: int,
                     initial_description: str = '') -> WalkRun:
    """
    Эволюция блоками по шесть шагов через шаблон шириной 13 узлов.

    Снимок записывается после каждого блока, поэтому результат - стробоскопическая история S^6.

    Raises:
        ValueError: если модель не фибоначчиева или six_step_count < 0.
    """
    if not model.variant.is_fibonacci:
        raise ValueError(f"Стробоскопическая эволюция определена только для фибоначчиевых моделей, получено {model}")
    if six_step_count < 0:
        raise ValueError(f"Число блоков должно быть неотрицательным, получено {six_step_count}")

    coefficients = closed_form_coefficients(model, model.angles)

    field = initial.copy()
    snapshots = [Snapshot(0, field)]
    for block in range(1, six_step_count + 1):
        field = apply_stencil(field, coefficients)
        snapshots.append(Snapshot(STROBOSCOPE_PERIOD * block, field))

    steps = STROBOSCOPE_PERIOD * six_step_count
    if six_step_count:
        _check_norm(model, initial, field, steps)

    return WalkRun(
        model=model,
        n=initial.n,
        steps=steps,
        snapshots=snapshots,
        initial=initial_description,
        word_prefix=coin_word_for(model, steps).prefix(min(WORD_PREFIX_LENGTH, steps)),
    )

def stroboscope(walk_run: WalkRun, period: int = STROBOSCOPE_PERIOD) -> list[Snapshot]:
    """
    Снимки прогона, номер шага которых кратен `period`.
    """
    if period <= 0:
        raise ValueError(f"Период стробоскопа должен быть положительным, получено {period}")
    return [snapshot for snapshot in walk_run.snapshots if snapshot.step % period == 0]
