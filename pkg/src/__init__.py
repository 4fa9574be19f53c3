"""
Основной пакет: изоморфизм типов с пересечениями и объединениями
"""
