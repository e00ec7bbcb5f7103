import functools
import logging
from fractions import Fraction
from math import factorial

from sympy.utilities.iterables import partitions

from wreathpow.models.partition import Partition
from wreathpow.utils import require_prime

log = logging.getLogger(__name__)


def partitions_of(n):
    """Every partition of n exactly once, in reverse lexicographic order of the part lists:
    [n], [n-1, 1], ..., [1, ..., 1]. n = 0 gives the empty partition."""
    if n < 0:
        raise ValueError(f"cannot partition a negative number ({n})")

    if n == 0:
        yield Partition({})
        return

    # sympy hands out the same dict object every time
    for mults in partitions(n):
        yield Partition(dict(mults))


def power_type_sn(cycle_type, r):
    """The cycle type of pi^r for any pi of the given type (r prime).

    A k-cycle stays a k-cycle when r does not divide k, and splits into r cycles of length k/r otherwise."""
    require_prime(r)

    result = {}
    for part, mult in cycle_type.items():
        if part % r == 0:
            result[part // r] = result.get(part // r, 0) + r * mult
        else:
            result[part] = result.get(part, 0) + mult
    return Partition(result)


def is_rth_power_sn(cycle_type, r):
    """A permutation is an r-th power iff every part divisible by r has multiplicity divisible by r"""
    require_prime(r)
    return all(mult % r == 0 for part, mult in cycle_type.items() if part % r == 0)


def sn_class_size(cycle_type):
    denominator = 1
    for part, mult in cycle_type.items():
        denominator *= part ** mult * factorial(mult)
    return factorial(cycle_type.n) // denominator


@functools.lru_cache(maxsize=None)
def count_p(n):
    return sum(1 for _ in partitions_of(n))


@functools.lru_cache(maxsize=None)
def count_p_r(n, r):
    """Partitions of n with every multiplicity divisible by r"""
    require_prime(r)
    return sum(1 for lam in partitions_of(n) if all(mult % r == 0 for _, mult in lam.items()))


@functools.lru_cache(maxsize=None)
def count_p_r_prime(n, r):
    """Partitions of n where every part divisible by r has multiplicity divisible by r"""
    require_prime(r)
    return sum(1 for lam in partitions_of(n) if is_rth_power_sn(lam, r))


def power_count_sn(n, r):
    """|{pi^r : pi in S_n}|, summed over the cycle types that pass the power test"""
    require_prime(r)
    return sum(sn_class_size(lam) for lam in partitions_of(n) if is_rth_power_sn(lam, r))


def prob_r_sn(n, r):
    return Fraction(power_count_sn(n, r), factorial(n))
