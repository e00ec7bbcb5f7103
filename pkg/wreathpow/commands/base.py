import logging

from wreathpow import constants
from wreathpow.exc import InvalidGroupSpec
from wreathpow.groups import conjugacy_classes
from wreathpow.groups import resolve_group_spec

log = logging.getLogger(__name__)


class BaseCommand:
    """
    This class includes everything a subcommand needs to be runnable:
    its arguments, access to the config, and the group it works on.
    """

    ID = __name__.split(".")[-1]
    NAME = "Base Command"
    DESCRIPTION = "This is the description for the base command. It's what shows up in --help."
    # whether -r has to be a prime before the command is dispatched (unless --brute is given)
    PRIME_EXPONENT = True

    def __init__(self, config):
        self.config = config

    @classmethod
    def add_arguments(cls, parser):
        pass

    @staticmethod
    def add_group_argument(parser):
        parser.add_argument("group_spec", nargs="?", default=None, help="1, C:m, S:m, D:m or a group file")
        parser.add_argument("--group", "-g", dest="group_option", default=None, help="same as the positional group")

    def run(self, args, out):
        """Write the result to `out` and return the process exit code"""
        return constants.EXIT_OK

    def resolve_group(self, args):
        spec = args.group_option or args.group_spec
        if spec is None:
            raise InvalidGroupSpec(f"{self.ID} needs a group (1, C:m, S:m, D:m or a group file)")

        limit = self.config["groups"].getint("associativity_check_limit")
        group = resolve_group_spec(spec, associativity_check_limit=limit)
        log.debug("Resolved %s to %r", spec, group)
        return group

    def resolve_classes(self, args):
        return conjugacy_classes(self.resolve_group(args))

    def oracle_options(self):
        section = self.config["oracle"]
        return {
            "guard": section.getint("guard"),
            "workers": section.getint("workers"),
            "chunk_size": section.getint("chunk_size"),
        }

    def series_cap(self, args):
        if getattr(args, "cap", None) is not None:
            return args.cap
        return self.config["series"].getint("default_cap")
