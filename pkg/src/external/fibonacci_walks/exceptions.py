"""
Исключения библиотеки квантовых блужданий.

Все исключения наследуются от ValueError: они описывают недопустимые входные данные
или состояние, для которого измерение теряет смысл.
"""

class WalkError(ValueError):
    """Базовое исключение приложения."""

class LatticeTooSmallError(WalkError):
    """Решетка слишком мала: шаблон или оракул перекрываются через границу."""

class LatticeWrapError(WalkError):
    """Состояние достигло шва периодической решетки, моменты и фронт неоднозначны."""

class InsufficientDataError(WalkError):
    """Недостаточно точек для аппроксимации."""
