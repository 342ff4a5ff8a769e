"""
Single entry point for the batch tool: ``run(argv)`` returns an exit code.

Subcommands map onto the management commands of the core app, with
dashes accepted in place of underscores (``er-expected``).
"""
import os
import sys

SUBCOMMANDS = (
    'curve', 'point', 'spreads', 'diffusion', 'er-expected', 'oracle',
    'generate',
)


def usage():
    return 'usage: {} {{{}}} [options]\n'.format(
        'graph-uncertainty', ','.join(SUBCOMMANDS),
    )


def run(argv=None):
    """Run one subcommand; 0 on success, 1 on usage error, 2 on numerical
    failure."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(usage())
        return 1

    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    import django
    from django.core.management import load_command_class

    django.setup()
    name = argv[0].replace('-', '_')
    command = load_command_class('core', name)
    try:
        command.run_from_argv(['graph-uncertainty', name, *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0


if __name__ == '__main__':
    sys.exit(run())
