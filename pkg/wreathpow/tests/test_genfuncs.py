from fractions import Fraction
from math import factorial

import pytest

from wreathpow.genfuncs import check_plateau_series
from wreathpow.genfuncs import genfun_cc
from wreathpow.genfuncs import genfun_cc_r
from wreathpow.genfuncs import genfun_cycle_index
from wreathpow.genfuncs import genfun_cycle_index_sn
from wreathpow.genfuncs import genfun_p_r
from wreathpow.genfuncs import genfun_p_r_prime
from wreathpow.genfuncs import genfun_partitions
from wreathpow.genfuncs import genfun_prob_sn
from wreathpow.genfuncs import genfun_prob_wreath
from wreathpow.genfuncs import genfun_squares_hyperoctahedral_closed_form
from wreathpow.genfuncs import genfun_squares_sn_closed_form
from wreathpow.genfuncs import plateau_factorisation
from wreathpow.genfuncs import psi
from wreathpow.groups import catalog_group
from wreathpow.groups import catalog_groups_up_to
from wreathpow.groups import conjugacy_classes
from wreathpow.models.series import TruncatedSeries
from wreathpow.partitions import count_p
from wreathpow.partitions import count_p_r
from wreathpow.partitions import count_p_r_prime
from wreathpow.partitions import prob_r_sn
from wreathpow.wreath import count_classes
from wreathpow.wreath import count_power_classes_formula
from wreathpow.wreath import prob_r_wreath


def classes_of(kind, m=1):
    return conjugacy_classes(catalog_group(kind, m))


def geometric(cap):
    return TruncatedSeries([1] * (cap + 1), cap)


def test_psi_is_cosh_for_squares():
    assert psi(1, 1, 2, 4).coeffs == (1, 0, Fraction(1, 2), 0, Fraction(1, 24))

    # cosh(u^2 / 4)
    series = psi(2, Fraction(1, 2), 2, 8)
    assert series.coeffs == (1, 0, 0, 0, Fraction(1, 32), 0, 0, 0, Fraction(1, 6144))


def test_psi_with_zero_alpha():
    assert psi(3, 0, 5, 10) == TruncatedSeries.constant(1, 10)


def test_psi_keeps_every_rth_term():
    series = psi(1, 2, 3, 7)
    assert series.coeffs == (1, 0, 0, Fraction(8, 6), 0, 0, Fraction(64, 720), 0)


def test_partition_series_table():
    assert genfun_partitions(3).coeffs[1:] == (1, 2, 3)
    assert genfun_p_r(2, 3).coeffs[1:] == (0, 1, 0)
    assert genfun_p_r_prime(2, 3).coeffs[1:] == (1, 1, 2)


@pytest.mark.parametrize("r", [2, 3, 5])
def test_partition_series_match_counts(r):
    cap = 14
    p, p_r, p_r_prime = genfun_partitions(cap), genfun_p_r(r, cap), genfun_p_r_prime(r, cap)
    for n in range(cap + 1):
        assert p.coefficient(n) == count_p(n)
        assert p_r.coefficient(n) == count_p_r(n, r)
        assert p_r_prime.coefficient(n) == count_p_r_prime(n, r)


def test_p_r_is_p_of_u_to_the_r():
    for r in (2, 3):
        assert genfun_p_r(r, 12) == genfun_partitions(12).substitute_power(r).truncate(12)


def test_class_count_series():
    assert genfun_cc(3, 3).coefficient(3) == 22
    for s in (1, 2, 4):
        series = genfun_cc(s, 6)
        assert [series.coefficient(n) for n in range(7)] == [count_classes(s, n) for n in range(7)]


def test_power_class_count_series():
    assert genfun_cc_r(classes_of("symmetric", 3), 2, 3).coefficient(3) == 8
    assert genfun_cc_r(classes_of("cyclic", 3), 2, 3).coefficient(3) == 13

    for group in catalog_groups_up_to(6):
        classes = conjugacy_classes(group)
        for r in (2, 3):
            series = genfun_cc_r(classes, r, 5)
            for n in range(1, 6):
                assert series.coefficient(n) == count_power_classes_formula(classes, n, r)


def test_prob_wreath_series_examples():
    assert genfun_prob_wreath(classes_of("cyclic", 3), 2, 3).coefficient(3) == Fraction(1, 2)
    assert genfun_prob_wreath(classes_of("symmetric", 3), 2, 3).coefficient(3) == Fraction(1, 4)


@pytest.mark.parametrize("kind, m, r", [("cyclic", 3, 2), ("cyclic", 2, 3), ("symmetric", 3, 2), ("trivial", 1, 2)])
def test_prob_wreath_series_matches_classes(kind, m, r):
    classes = classes_of(kind, m)
    series = genfun_prob_wreath(classes, r, 6)

    assert series.coefficient(0) == 1
    for n in range(1, 7):
        assert series.coefficient(n) == prob_r_wreath(classes, n, r), n


def test_prob_wreath_series_for_coprime_catalog_groups():
    for group in catalog_groups_up_to(7):
        classes = conjugacy_classes(group)
        for r in (2, 3):
            if group.order % r == 0:
                continue
            series = genfun_prob_wreath(classes, r, 6)
            assert [series.coefficient(n) for n in range(1, 7)] == [prob_r_wreath(classes, n, r) for n in range(1, 7)]


def test_prob_sn_series():
    for r in (2, 3):
        series = genfun_prob_sn(r, 9)
        assert [series.coefficient(n) for n in range(1, 10)] == [prob_r_sn(n, r) for n in range(1, 10)]

    assert genfun_prob_sn(2, 10) == genfun_prob_wreath(classes_of("trivial"), 2, 10)


def test_squares_closed_forms():
    assert genfun_squares_sn_closed_form(12) == genfun_prob_sn(2, 12)

    hyperoctahedral = genfun_squares_hyperoctahedral_closed_form(10)
    assert hyperoctahedral == genfun_prob_wreath(classes_of("cyclic", 2), 2, 10)
    assert hyperoctahedral.coefficient(3) == Fraction(1, 4)


def test_cycle_index_at_one_is_geometric():
    for kind, m in (("trivial", 1), ("cyclic", 2), ("symmetric", 3), ("dihedral", 4)):
        assert genfun_cycle_index(classes_of(kind, m), 8) == geometric(8)
    assert genfun_cycle_index_sn(8) == geometric(8)


def test_cycle_index_weight_selects_types():
    classes = classes_of("symmetric", 3)
    # only fixed points with identity coordinates: the identity element alone
    series = genfun_cycle_index(classes, 6, weight=lambda i, j: 1 if (i, j) == (0, 1) else 0)

    for n in range(7):
        assert series.coefficient(n) == Fraction(1, 6 ** n * factorial(n))


def test_check_plateau_series():
    assert check_plateau_series(genfun_prob_wreath(classes_of("cyclic", 3), 2, 8), 2) == []
    assert check_plateau_series(TruncatedSeries.constant(1, 0), 2) == []
    assert check_plateau_series(TruncatedSeries([1, 1, 1, 1], 3), 2) == []
    # 1 jumps to 0 between degrees 0 and 1
    assert check_plateau_series(TruncatedSeries.constant(1, 6), 2) == [0]
    assert check_plateau_series(TruncatedSeries([1, 1, 2], 2), 2) == []
    assert check_plateau_series(TruncatedSeries([1, 2, 2], 2), 2) == [0]


def test_plateau_factorisation():
    quotient, stray = plateau_factorisation(genfun_prob_wreath(classes_of("cyclic", 3), 2, 8), 2)
    assert stray == []
    assert quotient.coefficient(0) == 1

    _, stray = plateau_factorisation(TruncatedSeries([1, 2, 2, 2], 3), 2)
    assert stray != []
