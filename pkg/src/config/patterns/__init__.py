"""
Директория содержащая различные конфигурации для различных окружений Django-приложения.

Выбор конфигурации выполняется по переменной окружения API_DEPLOY_TYPE (development или production).
"""
