import logging
from fractions import Fraction
from math import factorial
from math import gcd

from wreathpow.exc import ConsistencyError
from wreathpow.exc import HypothesisError
from wreathpow.exc import PreconditionError
from wreathpow.groups import nonpower_classes
from wreathpow.models.report import CheckReport
from wreathpow.models.type_matrix import TypeMatrix
from wreathpow.models.type_matrix import WreathClassInfo
from wreathpow.partitions import count_p
from wreathpow.partitions import count_p_r
from wreathpow.partitions import count_p_r_prime
from wreathpow.partitions import partitions_of
from wreathpow.utils import compositions
from wreathpow.utils import require_prime
from wreathpow.utils import time_method

log = logging.getLogger(__name__)


def wreath_order(classes, n):
    """|G|^n n!"""
    return classes.group.order ** n * factorial(n)


@time_method
def enumerate_types(s, n):
    """Every s x n type matrix exactly once, in descending lexicographic order of the row-major dense reading.

    The identity type (all mass at class 0, column 1) always comes first."""
    if s < 1 or n < 1:
        raise PreconditionError(f"type matrices need s >= 1 and n >= 1, got s={s}, n={n}")

    types = []
    for row_sizes in compositions(n, s):
        rows = [list(partitions_of(size)) for size in row_sizes]
        _collect_types(s, n, rows, [], types)

    types.sort(key=lambda t: t.dense_key(), reverse=True)
    log.debug("%s types for s=%s, n=%s", len(types), s, n)
    return types


def _collect_types(s, n, rows, chosen, out):
    if len(chosen) == len(rows):
        out.append(TypeMatrix.from_row_partitions(s, n, chosen))
        return

    for lam in rows[len(chosen)]:
        chosen.append(lam)
        _collect_types(s, n, rows, chosen, out)
        chosen.pop()


def _check_dimensions(t, classes):
    if t.s != classes.num_classes:
        raise PreconditionError(f"type matrix has {t.s} rows, {classes.group.name} has {classes.num_classes} classes")


def centralizer_size(t, sizes, gorder):
    """Product of a! (j |G| / |C_i|)^a over the nonzero entries a = a_ij"""
    result = 1
    for (i, j), a in t.items():
        result *= factorial(a) * (j * gorder // sizes[i]) ** a
    return result


def class_info(t, classes):
    _check_dimensions(t, classes)

    total = wreath_order(classes, t.n)
    centralizer = centralizer_size(t, classes.sizes, classes.group.order)
    class_size, remainder = divmod(total, centralizer)
    if remainder:
        raise ConsistencyError(f"centralizer order {centralizer} of {t.to_text()} does not divide {total}")

    return WreathClassInfo(t, centralizer, class_size, Fraction(class_size, total))


def power_type(t, r, classes):
    """The type of g^r for any g of type t.

    A j-cycle with r | j splits into r cycles of length j/r carrying the same class, a j-cycle with r not
    dividing j stays a j-cycle and its class C_k moves to (C_k)^r."""
    require_prime(r)
    _check_dimensions(t, classes)

    power_map = classes.power_map(r)
    result = {}
    for (i, j), a in t.items():
        if j % r == 0:
            key = (i, j // r)
            result[key] = result.get(key, 0) + r * a
        else:
            key = (power_map[i], j)
            result[key] = result.get(key, 0) + a
    return TypeMatrix(t.s, t.n, result)


def is_rth_power_type(t, r, labeling):
    """Whether the class of type t consists of r-th powers.

    Every entry in a row of a class that is not an r-th power in G, and every entry in a column j with r | j,
    has to be divisible by r."""
    require_prime(r)
    if labeling.r != r:
        raise PreconditionError(f"class labeling was made for r={labeling.r}, not r={r}")

    for (i, j), a in t.items():
        if a % r == 0:
            continue
        if j % r == 0 or not labeling.is_power_class(i):
            return False
    return True


def preimage_type(t, r, classes, labeling):
    """A type whose r-th power has type t.

    Mass at a power class i in a column j not divisible by r moves to the least class whose r-th power is C_i,
    every other entry is divided by r and moved to column r j."""
    _check_dimensions(t, classes)
    if not is_rth_power_type(t, r, labeling):
        raise PreconditionError(f"{t.to_text()} is not the type of an r-th power for r={r}")

    result = {}
    for (i, j), a in t.items():
        if j % r != 0 and labeling.is_power_class(i):
            key = (classes.roots(i, r)[0], j)
            result[key] = result.get(key, 0) + a
        else:
            key = (i, r * j)
            result[key] = result.get(key, 0) + a // r

    preimage = TypeMatrix(t.s, t.n, result)
    if power_type(preimage, r, classes) != t:
        raise ConsistencyError(f"preimage {preimage.to_text()} of {t.to_text()} does not power back to it")
    return preimage


def count_classes(s, n):
    """Sum over ordered s-tuples (n_1, ..., n_s) with sum n of p(n_1) ... p(n_s)"""
    total = 0
    for row_sizes in compositions(n, s):
        product = 1
        for size in row_sizes:
            product *= count_p(size)
        total += product
    return total


def count_power_classes_formula(classes, n, r):
    """Same composition sum, with p_r for the d classes that are not r-th powers and p_r' for the rest"""
    labeling = nonpower_classes(classes, r)

    total = 0
    for row_sizes in compositions(n, classes.num_classes):
        product = 1
        for i, size in enumerate(row_sizes):
            if labeling.is_power_class(i):
                product *= count_p_r_prime(size, r)
            else:
                product *= count_p_r(size, r)
        total += product
    return total


def power_types(classes, n, r):
    """The types of G wr S_n that pass the r-th power test, in enumeration order"""
    labeling = nonpower_classes(classes, r)
    return [t for t in enumerate_types(classes.num_classes, n) if is_rth_power_type(t, r, labeling)]


def count_power_elements(classes, n, r):
    """|{g^r : g in G wr S_n}|"""
    return sum(class_info(t, classes).class_size for t in power_types(classes, n, r))


def prob_r_wreath(classes, n, r):
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    return Fraction(count_power_elements(classes, n, r), wreath_order(classes, n))


def power_element_counts(classes, n_max, r):
    """(n, |omega_r(G wr S_n)|) for n = 1 .. n_max"""
    return [(n, count_power_elements(classes, n, r)) for n in range(1, n_max + 1)]


def cycle_index_polynomial(classes, n):
    """(type, |class| / |G|^n n!) for every conjugacy class, in enumeration order"""
    terms = []
    for t in enumerate_types(classes.num_classes, n):
        terms.append((t, class_info(t, classes).class_probability))

    total = sum(coefficient for _, coefficient in terms)
    if total != 1:
        raise ConsistencyError(f"cycle index coefficients of {classes.group.name} wr S_{n} sum to {total}")
    return terms


def format_cycle_index(terms):
    return " + ".join(f"{coefficient} {t.monomial()}" for t, coefficient in terms)


def verify_plateau(classes, r, n_max):
    """P_r(G wr S_(n+1)) = P_r(G wr S_n) for every n <= n_max with n != -1 (mod r).

    Only claimed when r does not divide |G|, otherwise HypothesisError is raised."""
    require_prime(r)
    order = classes.group.order
    if gcd(r, order) != 1:
        raise HypothesisError(f"plateau needs gcd(r, |G|) = 1, but gcd({r}, {order}) = {gcd(r, order)}")

    report = CheckReport(f"plateau {classes.group.name} r={r}")
    counts = dict(power_element_counts(classes, n_max + 1, r))
    for n in range(1, n_max + 1):
        if n % r == r - 1:
            continue

        lower = Fraction(counts[n], wreath_order(classes, n))
        upper = Fraction(counts[n + 1], wreath_order(classes, n + 1))
        report.check(lower == upper, f"n={n}: P_r(n+1) = {upper}, P_r(n) = {lower}")
        report.check(
            counts[n + 1] == order * (n + 1) * counts[n],
            f"n={n}: |omega_r(n+1)| = {counts[n + 1]}, |G|(n+1)|omega_r(n)| = {order * (n + 1) * counts[n]}",
        )
    return report
