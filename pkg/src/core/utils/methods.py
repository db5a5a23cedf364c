"""
Файл с вспомогательными методами.

Этот файл содержит вспомогательные методы, которые используются в командах и модулях приложения.
"""

from typing import Dict

def parse_errors_to_dict(error_dict: Dict[str, list]) -> Dict[str, str]:
    """
    Преобразует словарь ошибок в строковый формат.

    Аргументы:
        error_dict (Dict[str, list]): Словарь, где ключи - это поля, а значения - списки ошибок.

    Возвращает:
        Dict[str, str]: Словарь, где ключи - это поля, а значения - строки, содержащие ошибки, разделенные запятыми.
    """
    parsed_errors = {}

    for field, details in error_dict.items():
        if isinstance(details, dict):
            details = [f"{key}: {value}" for key, value in parse_errors_to_dict(details).items()]
        elif not isinstance(details, (list, tuple)):
            details = [details]
        parsed_errors[field] = ", ".join(str(detail) for detail in details)

    return parsed_errors

def format_errors(error_dict: Dict[str, list]) -> str:
    """
    Собирает ошибки валидации в одну строку вида `поле: ошибка; поле: ошибка`.
    """
    return "; ".join(f"{field}: {message}" for field, message in parse_errors_to_dict(error_dict).items())
