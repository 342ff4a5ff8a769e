#!/usr/bin/env python
"""Command-line entry point for the graph uncertainty tools.

``manage.py curve ...`` and the other curve subcommands (including the
dashed ``er-expected``) go through core.cli so their exit codes are
0 / 1 / 2; everything else is handed to Django.
"""
import os
import sys


def main():
    """Run a curve subcommand or a Django administrative task."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc

    from core.cli import SUBCOMMANDS, run
    if len(sys.argv) > 1 and sys.argv[1] in SUBCOMMANDS:
        sys.exit(run(sys.argv[1:]))
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
