#!/usr/bin/env python3
import logging
import sys

from wreathpow import constants

log = logging.getLogger(__name__)

DEFAULT_CONFIG = "config.ini"


def run(args, out=sys.stdout):
    from wreathpow.commands import run_command
    from wreathpow.utils import init_logging
    from wreathpow.utils import load_config

    try:
        config = load_config(args.config or DEFAULT_CONFIG, required=args.config is not None)
    except FileNotFoundError as e:
        init_logging("wreathpow", args.log_level or "INFO")
        log.error(e)
        return constants.EXIT_INPUT_ERROR

    init_logging("wreathpow", args.log_level or config["main"]["log_level"])
    return run_command(args, config, out)


def handle_exceptions(exctype, value, tb):
    log.error("Logging an uncaught exception", exc_info=(exctype, value, tb))


if __name__ == "__main__":
    from wreathpow.commands import available_commands
    from wreathpow.utils import parse_args

    sys.excepthook = handle_exceptions

    args = parse_args(available_commands)

    sys.exit(run(args))
