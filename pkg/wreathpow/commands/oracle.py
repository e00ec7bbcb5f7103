import logging
from fractions import Fraction
from math import factorial

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.oracle import power_image_count

log = logging.getLogger(__name__)


class OracleCommand(BaseCommand):
    ID = "oracle"
    NAME = "Brute-force power count"
    DESCRIPTION = "Counts the M-th powers in G wr S_n by powering every element; composite M needs --brute"

    @classmethod
    def add_arguments(cls, parser):
        cls.add_group_argument(parser)
        parser.add_argument("-n", type=int, required=True, help="degree of the symmetric group")
        parser.add_argument("-r", type=int, required=True, help="the exponent M")
        parser.add_argument("--brute", action="store_true", help="allow a composite exponent")

    def run(self, args, out):
        group = self.resolve_group(args)
        count = power_image_count(group, args.n, args.r, **self.oracle_options())
        order = group.order ** args.n * factorial(args.n)

        out.write(f"omega\t{count}\n")
        out.write(f"order\t{order}\n")
        out.write(f"P\t{Fraction(count, order)}\n")
        return constants.EXIT_OK
