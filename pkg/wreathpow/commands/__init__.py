import logging

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.commands.classes import ClassesCommand
from wreathpow.commands.cycle_index import CycleIndexCommand
from wreathpow.commands.export import ExportCommand
from wreathpow.commands.oracle import OracleCommand
from wreathpow.commands.powers import PowersCommand
from wreathpow.commands.scan import ScanCommand
from wreathpow.commands.series import SeriesCommand
from wreathpow.commands.verify import VerifyCommand
from wreathpow.exc import ConsistencyError
from wreathpow.exc import HypothesisError
from wreathpow.exc import WreathPowError
from wreathpow.utils import find
from wreathpow.utils import require_prime

log = logging.getLogger(__name__)

available_commands = [
    ClassesCommand,
    PowersCommand,
    SeriesCommand,
    VerifyCommand,
    ScanCommand,
    OracleCommand,
    CycleIndexCommand,
    ExportCommand,
]


def find_command(command_id):
    return find(lambda command: command.ID == command_id, available_commands)


def run_command(args, config, out):
    """Dispatch a parsed command line and translate library errors into exit codes"""
    command_class = find_command(args.command)
    if command_class is None:
        log.error("Unknown command %s", args.command)
        return constants.EXIT_INPUT_ERROR

    try:
        r = getattr(args, "r", None)
        if command_class.PRIME_EXPONENT and r is not None and not getattr(args, "brute", False):
            require_prime(r)

        return command_class(config).run(args, out)
    except HypothesisError as e:
        out.write(f"REFUSED\t{e}\n")
        log.warning("Refused: %s", e)
        return constants.EXIT_REFUSED
    except ConsistencyError as e:
        log.error("Internal consistency check failed: %s", e)
        return constants.EXIT_CONSISTENCY_FAILURE
    except WreathPowError as e:
        log.error("%s", e)
        return constants.EXIT_INPUT_ERROR
