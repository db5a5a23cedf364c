"""
Вспомогательные методы ввода-вывода: разбор углов и запись файлов результатов.
"""

import json
import math
import os
import re

import pandas as pd

# Число, доля π или их произведение: 0.3, pi, pi/4, 3pi/8, 3*pi/8, -pi/2, 0.25pi
_PI_LITERAL = re.compile(r'^(?P<sign>[+-]?)(?P<coefficient>\d+(?:\.\d*)?|\.\d+)?\*?pi(?:/(?P<divisor>\d+(?:\.\d*)?))?$')

CSV_FLOAT_FORMAT = '%.17g'

def parse_angle(value) -> float:
    """
    Разбирает угол в радианах из числа или литерала с π.

    Args:
        value (str | float | int): Например 0.3, "pi/4", "3pi/8", "3*pi/8", "-pi/2", "0.25pi".

    Returns:
        float: Угол в радианах.

    Raises:
        ValueError: если значение не распознано или не конечно.
    """
    if isinstance(value, bool):
        raise ValueError(f"Не удалось разобрать угол: {value!r}")

    if isinstance(value, (int, float)):
        angle = float(value)
    else:
        text = str(value).strip().lower().replace(' ', '').replace('π', 'pi')
        match = _PI_LITERAL.match(text)
        if match:
            coefficient = float(match.group('coefficient') or 1.0)
            divisor = float(match.group('divisor') or 1.0)
            if divisor == 0.0:
                raise ValueError(f"Деление на ноль в угле: {value!r}")
            angle = coefficient * math.pi / divisor
            if match.group('sign') == '-':
                angle = -angle
        else:
            try:
                angle = float(text)
            except ValueError:
                raise ValueError(f"Не удалось разобрать угол: {value!r}") from None

    if not math.isfinite(angle):
        raise ValueError(f"Угол должен быть конечным: {value!r}")
    return angle

def ensure_directory(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path

def write_csv(frame: pd.DataFrame, path: str) -> str:
    """Записывает таблицу с фиксированным форматом чисел: повторный запуск дает тот же файл."""
    frame.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
    return path

def _finite_or_none(value):
    if isinstance(value, dict):
        return {key: _finite_or_none(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_finite_or_none(item) for item in value]
    if hasattr(value, 'item') and not isinstance(value, (str, bytes)):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value

def write_json(payload: dict, path: str) -> str:
    """Записывает JSON; значения nan и inf заменяются на null."""
    with open(path, 'w', encoding='utf-8') as output:
        json.dump(_finite_or_none(payload), output, indent=2, ensure_ascii=False)
        output.write('\n')
    return path
