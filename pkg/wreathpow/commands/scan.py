import logging
from math import gcd

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.exc import HypothesisError
from wreathpow.exc import PreconditionError
from wreathpow.groups import catalog_groups_up_to
from wreathpow.groups import conjugacy_classes
from wreathpow.groups import resolve_group_spec
from wreathpow.partitions import prob_r_sn
from wreathpow.utils import write_table
from wreathpow.wreath import prob_r_wreath

log = logging.getLogger(__name__)

SCAN_QUESTIONS = {"q1": "sandwich", "q2": "gap"}


class ScanCommand(BaseCommand):
    ID = "scan"
    NAME = "Empirical scanner"
    DESCRIPTION = (
        "Tabulates two open inequalities over a list of groups coprime to r, without claiming either: "
        "q1 or sandwich (P_r(S_n+1) <= P_r(G wr S_n) <= P_r(S_n), for n = -1 mod r) "
        "and q2 or gap (P_r(G wr S_n) - P_r(S_n+1))"
    )

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("question", choices=("q1", "q2", "sandwich", "gap"), help="q1 (sandwich) or q2 (gap)")
        parser.add_argument("-r", type=int, required=True, help="prime exponent")
        parser.add_argument("-n", type=int, required=True, help="degree of the symmetric group")
        parser.add_argument("--groups", default=None, help="comma separated group specs, e.g. C:3,C:5,C:7")
        parser.add_argument("--order-bound", type=int, default=None, help="scan every catalog group up to this order")

    def _groups(self, args):
        limit = self.config["groups"].getint("associativity_check_limit")

        if args.groups:
            groups = [resolve_group_spec(spec, associativity_check_limit=limit) for spec in args.groups.split(",")]
            for group in groups:
                if gcd(args.r, group.order) != 1:
                    raise HypothesisError(f"{group.name} has order {group.order}, which is not coprime to r={args.r}")
            return groups

        if args.order_bound is None:
            raise PreconditionError("scan needs --groups or --order-bound")

        groups = []
        for group in catalog_groups_up_to(args.order_bound, associativity_check_limit=limit):
            if gcd(args.r, group.order) == 1:
                groups.append(group)
            else:
                log.debug("Skipping %s, its order is not coprime to r=%s", group.name, args.r)
        return groups

    def run(self, args, out):
        r, n = args.r, args.n
        question = SCAN_QUESTIONS.get(args.question, args.question)
        if question == "sandwich" and n % r != r - 1:
            raise HypothesisError(f"the sandwich is only asked for n = -1 (mod r), got n={n}, r={r}")

        groups = self._groups(args)
        p_next = prob_r_sn(n + 1, r)
        p_same = prob_r_sn(n, r)

        out.write("# EMPIRICAL: values are computed exactly, no inequality is claimed to hold in general\n")
        rows = []
        if question == "sandwich":
            for group in groups:
                p = prob_r_wreath(conjugacy_classes(group), n, r)
                violation = "no" if p_next <= p <= p_same else "yes"
                rows.append((group.name, group.order, p_next, p, p_same, violation))
            write_table(out, ("group", "order", "P_r(S_n+1)", "P_r(G wr S_n)", "P_r(S_n)", "violation"), rows)
        else:
            for group in groups:
                p = prob_r_wreath(conjugacy_classes(group), n, r)
                rows.append((group.name, group.order, p, p_next, p - p_next))
            rows.sort(key=lambda row: (row[1], row[0]))
            write_table(out, ("group", "order", "P_r(G wr S_n)", "P_r(S_n+1)", "gap"), rows)
        return constants.EXIT_OK
