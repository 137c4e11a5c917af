# src/Models/__init__.py
