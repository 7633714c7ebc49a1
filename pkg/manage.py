#!/usr/bin/env python
"""Command-line entry point: verification commands and Django administrative tasks."""
import os
import sys

# distinct from a failed check (1)
EXIT_UNKNOWN_COMMAND = 2


def main():
    """Run administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'lsverify.settings')
    try:
        import django
        from django.core.management import ManagementUtility, execute_from_command_line, get_commands
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    if len(sys.argv) > 1 and not sys.argv[1].startswith('-') and sys.argv[1] not in ('help', 'version'):
        django.setup()
        if sys.argv[1] not in get_commands():
            sys.stderr.write(f"Unknown command: {sys.argv[1]!r}\n\n")
            sys.stderr.write(ManagementUtility(sys.argv).main_help_text() + '\n')
            sys.exit(EXIT_UNKNOWN_COMMAND)
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
