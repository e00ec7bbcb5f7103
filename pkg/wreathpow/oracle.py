import itertools
import logging
from fractions import Fraction
from math import factorial

from wreathpow import constants
from wreathpow.action_queue import ActionQueue
from wreathpow.exc import GuardExceeded
from wreathpow.exc import PreconditionError
from wreathpow.genfuncs import genfun_prob_wreath
from wreathpow.groups import nonpower_classes
from wreathpow.models.report import CheckReport
from wreathpow.models.type_matrix import TypeMatrix
from wreathpow.models.wreath_element import WreathElement
from wreathpow.utils import iterate_in_chunks
from wreathpow.utils import time_method
from wreathpow.wreath import class_info
from wreathpow.wreath import count_power_elements
from wreathpow.wreath import enumerate_types
from wreathpow.wreath import is_rth_power_type
from wreathpow.wreath import power_type
from wreathpow.wreath import prob_r_wreath

log = logging.getLogger(__name__)


def wreath_multiply(a, b, group):
    """(f, pi)(f', pi') = (f f'_pi, pi pi') where f'_pi(i) = f'(pi^-1(i))"""
    if a.n != b.n:
        raise PreconditionError(f"cannot multiply elements of degree {a.n} and {b.n}")

    a_inverse = a.pi_inverse()
    f = [group.multiply(a.f[i], b.f[a_inverse[i]]) for i in range(a.n)]
    pi = [a.pi[b.pi[i]] for i in range(a.n)]
    return WreathElement(f, pi)


def wreath_inverse(a, group):
    """(f^-1_(pi^-1), pi^-1)"""
    return WreathElement([group.inverse(a.f[a.pi[i]]) for i in range(a.n)], a.pi_inverse())


def wreath_power(a, exponent, group):
    if exponent < 1:
        raise PreconditionError(f"exponent must be at least 1, got {exponent}")

    result = a
    for _ in range(exponent - 1):
        result = wreath_multiply(result, a, group)
    return result


def closed_form_power(a, exponent, group):
    """(f f_pi ... f_(pi^(exponent-1)), pi^exponent) without multiplying the permutations step by step"""
    a_inverse = a.pi_inverse()

    f = []
    for i in range(a.n):
        value = group.identity
        point = i
        for _ in range(exponent):
            value = group.multiply(value, a.f[point])
            point = a_inverse[point]
        f.append(value)

    pi = list(range(a.n))
    for _ in range(exponent):
        pi = [a.pi[point] for point in pi]
    return WreathElement(f, pi)


def element_type(a, classes):
    """Tally the cycle products f(j) f(pi^-1 j) ... of every cycle of pi by (class, cycle length)"""
    group = classes.group
    entries = {}
    for cycle in a.cycles():
        value = group.identity
        for point in cycle:
            value = group.multiply(value, a.f[point])
        key = (classes.class_of(value), len(cycle))
        entries[key] = entries.get(key, 0) + 1
    return TypeMatrix(classes.num_classes, a.n, entries)


def _check_guard(group, n, guard):
    size = group.order ** n * factorial(n)
    if size > guard:
        raise GuardExceeded(f"{group.name} wr S_{n} has {size} elements, the oracle stops at {guard}")
    return size


def _elements_for(group, n, permutations):
    for pi in permutations:
        for f in itertools.product(range(group.order), repeat=n):
            yield WreathElement(f, pi)


def iterate_elements(group, n, guard=constants.ORACLE_GUARD):
    """Every element of G wr S_n, permutations in lexicographic order, then f in lexicographic order"""
    _check_guard(group, n, guard)
    return _elements_for(group, n, itertools.permutations(range(n)))


def _power_images(group, n, exponent, permutations):
    return {wreath_power(a, exponent, group) for a in _elements_for(group, n, permutations)}


@time_method
def power_image_count(group, n, exponent, guard=constants.ORACLE_GUARD, workers=1, chunk_size=64):
    """|{g^exponent : g in G wr S_n}| by powering every element. Composite exponents are fine here"""
    if exponent < 1:
        raise PreconditionError(f"exponent must be at least 1, got {exponent}")
    _check_guard(group, n, guard)

    permutations = itertools.permutations(range(n))
    if workers <= 1:
        return len(_power_images(group, n, exponent, permutations))

    images = set()
    with ActionQueue(workers) as queue:
        futures = [
            queue.submit(_power_images, group, n, exponent, chunk)
            for chunk in iterate_in_chunks(permutations, chunk_size)
        ]
        for future in futures:
            images |= future.result()
    return len(images)


def power_image_probability(group, n, exponent, **options):
    return Fraction(power_image_count(group, n, exponent, **options), group.order ** n * factorial(n))


def verify_power_type_lemma(classes, n, r, guard=constants.ORACLE_GUARD):
    """For every element g: type(g^r) = power_type(type(g)), and the closed form of g^r agrees with
    repeated multiplication"""
    group = classes.group
    report = CheckReport(f"power-type {group.name} n={n} r={r}")

    total = 0
    type_failures = []
    closed_form_failures = []
    for a in iterate_elements(group, n, guard):
        total += 1
        powered = wreath_power(a, r, group)
        if element_type(powered, classes) != power_type(element_type(a, classes), r, classes):
            type_failures.append(a)
        if closed_form_power(a, r, group) != powered:
            closed_form_failures.append(a)

    report.check(not type_failures, f"type of g^r matches the power type for {total - len(type_failures)}/{total}")
    for a in type_failures[:5]:
        report.check(False, f"mismatch at {a}")
    report.check(
        not closed_form_failures, f"closed form equals iterated product for {total - len(closed_form_failures)}/{total}"
    )
    return report


def verify_conjugacy_types(classes, n, guard=constants.CONJUGACY_GUARD):
    """Conjugation orbits coincide with the grouping by type, and orbit sizes match the class size formula"""
    group = classes.group
    report = CheckReport(f"conjugacy {group.name} n={n}")

    elements = list(iterate_elements(group, n, guard))
    inverses = [wreath_inverse(y, group) for y in elements]

    seen = set()
    orbit_types = {}
    for x in elements:
        if x in seen:
            continue
        orbit = {
            wreath_multiply(wreath_multiply(y, x, group), y_inverse, group) for y, y_inverse in zip(elements, inverses)
        }
        seen |= orbit

        types = {element_type(z, classes) for z in orbit}
        if len(types) != 1:
            report.check(False, f"orbit of {x} mixes {len(types)} types")
            continue
        t = types.pop()
        if t in orbit_types:
            report.check(False, f"type {t.to_text()} is split over several orbits")
            continue
        orbit_types[t] = len(orbit)

        expected = class_info(t, classes).class_size
        report.check(len(orbit) == expected, f"{t.to_text()}: orbit size {len(orbit)}, class size formula {expected}")

    all_types = set(enumerate_types(classes.num_classes, n))
    report.check(set(orbit_types) == all_types, f"{len(orbit_types)} orbits, {len(all_types)} enumerated types")
    return report


def verify_power_characterization(classes, n, r, guard=constants.ORACLE_GUARD):
    """The types of the r-th powers are exactly the types passing the r-th power test, and the number
    of r-th powers matches the class-level count"""
    group = classes.group
    report = CheckReport(f"power-classes {group.name} n={n} r={r}")
    labeling = nonpower_classes(classes, r)

    images = {wreath_power(a, r, group) for a in iterate_elements(group, n, guard)}
    image_types = {element_type(a, classes) for a in images}
    passing = {t for t in enumerate_types(classes.num_classes, n) if is_rth_power_type(t, r, labeling)}

    report.check(image_types <= passing, f"{len(image_types - passing)} types of r-th powers fail the test")
    report.check(passing <= image_types, f"{len(passing - image_types)} passing types have no r-th power")

    expected = count_power_elements(classes, n, r)
    report.check(len(images) == expected, f"|omega_r| by enumeration {len(images)}, by classes {expected}")
    return report


def verify_series_against_enumeration(classes, r, cap, guard=constants.ORACLE_GUARD):
    """Coefficients 1..cap of the probability series against the class-level probabilities,
    and against brute force wherever the group is small enough"""
    if cap < 1:
        raise PreconditionError(f"the series needs a cap of at least 1, got {cap}")
    group = classes.group
    report = CheckReport(f"series-vs-enum {group.name} r={r}")

    series = genfun_prob_wreath(classes, r, cap)
    for n in range(1, cap + 1):
        expected = prob_r_wreath(classes, n, r)
        coefficient = series.coefficient(n)
        report.check(coefficient == expected, f"n={n}: series {coefficient}, classes {expected}")

        if group.order ** n * factorial(n) <= guard:
            brute = power_image_probability(group, n, r, guard=guard)
            report.check(coefficient == brute, f"n={n}: series {coefficient}, enumeration {brute}")
    return report
