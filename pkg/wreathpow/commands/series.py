import logging
from math import gcd

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.exc import PreconditionError
from wreathpow.genfuncs import check_plateau_series
from wreathpow.genfuncs import genfun_cc
from wreathpow.genfuncs import genfun_cc_r
from wreathpow.genfuncs import genfun_p_r
from wreathpow.genfuncs import genfun_p_r_prime
from wreathpow.genfuncs import genfun_partitions
from wreathpow.genfuncs import genfun_prob_sn
from wreathpow.genfuncs import genfun_prob_wreath

log = logging.getLogger(__name__)

SERIES_KINDS = ("pr", "pr-sn", "cc", "ccr", "partitions", "p-r", "p-r-prime")


class SeriesCommand(BaseCommand):
    ID = "series"
    NAME = "Generating functions"
    DESCRIPTION = (
        "Prints a generating function one degree per line: pr (P_r(G wr S_n)), pr-sn (P_r(S_n)), "
        "cc (class counts), ccr (r-th power class counts), partitions, p-r, p-r-prime"
    )

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("which", choices=SERIES_KINDS, help="which generating function")
        cls.add_group_argument(parser)
        parser.add_argument("-r", type=int, default=2, help="prime exponent (default: 2)")
        parser.add_argument("--s", type=int, default=None, help="number of classes of G, for cc without a group")
        parser.add_argument("--cap", type=int, default=None, help="highest degree to print (default from config)")

    def run(self, args, out):
        cap = self.series_cap(args)
        if cap < 1:
            raise PreconditionError(f"--cap must be at least 1, got {cap}")

        plateau = None
        if args.which == "pr":
            classes = self.resolve_classes(args)
            series = genfun_prob_wreath(classes, args.r, cap)
            if gcd(args.r, classes.group.order) == 1:
                plateau = check_plateau_series(series, args.r)
        elif args.which == "pr-sn":
            series = genfun_prob_sn(args.r, cap)
            plateau = check_plateau_series(series, args.r)
        elif args.which == "cc":
            s = args.s if args.s is not None else self.resolve_classes(args).num_classes
            series = genfun_cc(s, cap)
        elif args.which == "ccr":
            series = genfun_cc_r(self.resolve_classes(args), args.r, cap)
        elif args.which == "partitions":
            series = genfun_partitions(cap)
        elif args.which == "p-r":
            series = genfun_p_r(args.r, cap)
        else:
            series = genfun_p_r_prime(args.r, cap)

        for n, coefficient in enumerate(series.coeffs):
            out.write(f"{n}\t{coefficient}\n")

        if plateau is None:
            return constants.EXIT_OK
        if plateau:
            out.write(f"FAIL\tplateau\t{','.join(str(k) for k in plateau)}\n")
            return constants.EXIT_VERIFY_FAILED
        out.write("PASS\tplateau\n")
        return constants.EXIT_OK
