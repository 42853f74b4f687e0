# distspec/utils/__init__.py
# Utility functions shared across distspec.
