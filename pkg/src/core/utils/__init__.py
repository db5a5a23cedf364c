"""
Пакет с общими средствами проекта: базовые команды управления, коды завершения,
поиск приложений и форматирование ошибок валидации.

Пример команды:
>>> python src/manage.py simulate --config run.yaml
"""
