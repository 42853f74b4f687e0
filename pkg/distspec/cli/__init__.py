# distspec/cli/__init__.py
# Command-line surface: parsing, commands and report formats.
