import logging
from fractions import Fraction

from sympy import isprime

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.exc import ConsistencyError
from wreathpow.groups import nonpower_classes
from wreathpow.oracle import power_image_count
from wreathpow.utils import write_table
from wreathpow.wreath import class_info
from wreathpow.wreath import count_power_classes_formula
from wreathpow.wreath import power_types
from wreathpow.wreath import preimage_type
from wreathpow.wreath import wreath_order

log = logging.getLogger(__name__)


class PowersCommand(BaseCommand):
    ID = "powers"
    NAME = "r-th power classes"
    DESCRIPTION = (
        "Lists the conjugacy classes of G wr S_n that consist of r-th powers, with CC_r, |omega_r| and P_r. "
        "With --brute the count is also taken by powering every element, which is the only route for composite r."
    )

    @classmethod
    def add_arguments(cls, parser):
        cls.add_group_argument(parser)
        parser.add_argument("-n", type=int, required=True, help="degree of the symmetric group")
        parser.add_argument("-r", type=int, required=True, help="the exponent (prime unless --brute)")
        parser.add_argument("--brute", action="store_true", help="also count by brute-force enumeration")

    def run(self, args, out):
        classes = self.resolve_classes(args)
        total = wreath_order(classes, args.n)

        brute_count = None
        if args.brute:
            brute_count = power_image_count(classes.group, args.n, args.r, **self.oracle_options())
            if not isprime(args.r):
                out.write(f"omega_brute\t{brute_count}\n")
                out.write(f"P_brute\t{Fraction(brute_count, total)}\n")
                return constants.EXIT_OK

        labeling = nonpower_classes(classes, args.r)
        rows = []
        omega = 0
        for t in power_types(classes, args.n, args.r):
            info = class_info(t, classes)
            omega += info.class_size
            rows.append((t.to_text(), info.class_size, preimage_type(t, args.r, classes, labeling).to_text()))

        formula = count_power_classes_formula(classes, args.n, args.r)
        if formula != len(rows):
            raise ConsistencyError(f"CC_r by filter is {len(rows)} but the product formula gives {formula}")

        write_table(out, ("type", "class_size", "preimage_type"), rows)
        out.write(f"d\t{labeling.d}\n")
        out.write(f"CC_r_filter\t{len(rows)}\n")
        out.write(f"CC_r_formula\t{formula}\n")
        out.write(f"omega\t{omega}\n")
        out.write(f"P\t{Fraction(omega, total)}\n")

        if brute_count is not None:
            if brute_count != omega:
                raise ConsistencyError(f"|omega_r| by enumeration is {brute_count}, by classes {omega}")
            out.write(f"omega_brute\t{brute_count}\n")
        return constants.EXIT_OK
