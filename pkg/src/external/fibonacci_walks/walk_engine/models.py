"""
Типы результатов прогона блуждания.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from src.external.fibonacci_walks.core_types.models import SpinorField, WalkModel

@dataclass(frozen=True)
class Snapshot:
    step: int
    field: SpinorField

@dataclass
class WalkRun:
    """
    История прогона: снимки состояния через заданный шаг.

    Attributes:
        model (WalkModel): Модель блуждания.
        n (int): Размер решетки.
        steps (int): Полное число трансляций.
        snapshots (list[Snapshot]): Снимки с возрастающими номерами шагов, первый - начальное состояние.
        initial (str): Описание начального условия.
        word_prefix (list[str]): Начало фактически примененного слова монет.
    """
    model: WalkModel
    n: int
    steps: int
    snapshots: list[Snapshot] = field(default_factory=list)
    initial: str = ''
    word_prefix: list[str] = field(default_factory=list)

    @property
    def final(self) -> SpinorField:
        return self.snapshots[-1].field

    @property
    def first(self) -> SpinorField:
        return self.snapshots[0].field

    def steps_recorded(self) -> list[int]:
        return [snapshot.step for snapshot in self.snapshots]
