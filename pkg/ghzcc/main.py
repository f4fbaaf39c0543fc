import importlib
from typing import List, Optional

import click

from ghzcc import LOGGER
from ghzcc.modules import ALL_MODULES


@click.group()
def cli():
    """Simulate the CC_n GHZ game: quantum protocol, classical optimum, noise thresholds."""
    pass


def load_modules(group: click.Group):
    """Import every subcommand module and let it register itself"""
    for module in ALL_MODULES:
        imported = importlib.import_module("ghzcc.modules." + module)
        if hasattr(imported, "register_commands"):
            imported.register_commands(group)
    LOGGER.debug("Registered commands: " + str(sorted(group.commands)))


load_modules(cli)


def run(args: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit status: 0 ok, 1 bad input, 2 failed check."""
    try:
        result = cli.main(args=args, prog_name="ghzcc", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return 1
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    raise SystemExit(run())
