from wreathpow import constants
from wreathpow.commands.base import BaseCommand


class ExportCommand(BaseCommand):
    ID = "export"
    NAME = "Export group"
    DESCRIPTION = "Writes a group (usually a catalog group) in the group file format"
    PRIME_EXPONENT = False

    @classmethod
    def add_arguments(cls, parser):
        cls.add_group_argument(parser)

    def run(self, args, out):
        out.write(self.resolve_group(args).to_cayley_text())
        return constants.EXIT_OK
