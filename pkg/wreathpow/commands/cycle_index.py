import logging

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.wreath import cycle_index_polynomial
from wreathpow.wreath import format_cycle_index

log = logging.getLogger(__name__)


class CycleIndexCommand(BaseCommand):
    ID = "cycle-index"
    NAME = "Cycle index"
    DESCRIPTION = "Prints the cycle index polynomial of G wr S_n, one monomial t_ij per (class, cycle length)"
    PRIME_EXPONENT = False

    @classmethod
    def add_arguments(cls, parser):
        cls.add_group_argument(parser)
        parser.add_argument("-n", type=int, required=True, help="degree of the symmetric group")

    def run(self, args, out):
        classes = self.resolve_classes(args)
        out.write(format_cycle_index(cycle_index_polynomial(classes, args.n)) + "\n")
        return constants.EXIT_OK
