import argparse

from wreathpow import constants


def parse_args(commands, argv=None):
    """
    Parse command-line arguments. Every command class adds its own subparser.
    """
    parser = argparse.ArgumentParser(
        prog="wreathpow", description="Exact r-th power counts and generating functions for wreath products G wr S_n"
    )
    parser.add_argument(
        "--config", "-c", default=None, help="Specify which config file to use (default: config.ini if it exists)"
    )
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR (overrides the config)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {constants.VERSION}")

    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for command in commands:
        subparser = subparsers.add_parser(command.ID, help=command.NAME, description=command.DESCRIPTION)
        command.add_arguments(subparser)

    return parser.parse_args(argv)
