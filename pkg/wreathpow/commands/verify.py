import logging

from wreathpow import constants
from wreathpow.commands.base import BaseCommand
from wreathpow.exc import PreconditionError
from wreathpow.genfuncs import check_plateau_series
from wreathpow.genfuncs import genfun_prob_wreath
from wreathpow.genfuncs import plateau_factorisation
from wreathpow.oracle import verify_conjugacy_types
from wreathpow.oracle import verify_power_characterization
from wreathpow.oracle import verify_power_type_lemma
from wreathpow.oracle import verify_series_against_enumeration
from wreathpow.wreath import verify_plateau

log = logging.getLogger(__name__)

# primary target names, each with a descriptive alias that is accepted as well
VERIFY_TARGETS = {
    "lemma-4.2": "power-type",
    "prop-3.1": "conjugacy",
    "prop-4.3": "power-classes",
    "theorem-5.4": "plateau",
    "series-vs-enum": "series-vs-enum",
}
VERIFY_CHOICES = list(VERIFY_TARGETS) + [alias for alias in VERIFY_TARGETS.values() if alias not in VERIFY_TARGETS]


class VerifyCommand(BaseCommand):
    ID = "verify"
    NAME = "Cross-checks"
    DESCRIPTION = (
        "Checks a class-level result against brute force or exact recomputation and prints PASS/FAIL lines: "
        "lemma-4.2 or power-type (type of g^r), prop-3.1 or conjugacy (orbits vs types), "
        "prop-4.3 or power-classes (which classes are r-th powers), "
        "theorem-5.4 or plateau (P_r(G wr S_n+1) = P_r(G wr S_n) when r does not divide |G|), series-vs-enum"
    )

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument("target", choices=VERIFY_CHOICES, help="what to verify")
        cls.add_group_argument(parser)
        parser.add_argument("-n", type=int, default=3, help="degree of the symmetric group (default: 3)")
        parser.add_argument("-r", type=int, default=2, help="prime exponent (default: 2)")
        parser.add_argument("--n-max", type=int, default=6, help="largest n for plateau (default: 6)")
        parser.add_argument("--cap", type=int, default=None, help="series degree for series-vs-enum")

    def run(self, args, out):
        target = VERIFY_TARGETS.get(args.target, args.target)
        classes = self.resolve_classes(args)
        guard = self.oracle_options()["guard"]

        if target == "power-type":
            report = verify_power_type_lemma(classes, args.n, args.r, guard=guard)
        elif target == "conjugacy":
            report = verify_conjugacy_types(classes, args.n, guard=self.config["oracle"].getint("conjugacy_guard"))
        elif target == "power-classes":
            report = verify_power_characterization(classes, args.n, args.r, guard=guard)
        elif target == "plateau":
            report = verify_plateau(classes, args.r, args.n_max)

            series = genfun_prob_wreath(classes, args.r, args.n_max + 1)
            stray_flat = check_plateau_series(series, args.r)
            report.check(not stray_flat, f"series coefficients flat outside n = -1 (mod r): {stray_flat or 'yes'}")
            _, stray = plateau_factorisation(series, args.r)
            report.check(not stray, f"series times (1-u)/(1-u^r) lives on multiples of r: {stray or 'yes'}")
        else:
            cap = self.series_cap(args)
            if cap < 1:
                raise PreconditionError(f"--cap must be at least 1, got {cap}")
            report = verify_series_against_enumeration(classes, args.r, cap, guard=guard)

        for line in report.lines():
            out.write(line + "\n")

        if report.passed:
            return constants.EXIT_OK
        log.error("%s: %s of %s checks failed", report.name, len(report.failures), len(report.checks))
        return constants.EXIT_VERIFY_FAILED
