import logging
from fractions import Fraction
from math import factorial

from wreathpow.groups import nonpower_classes
from wreathpow.models.series import TruncatedSeries
from wreathpow.utils import require_prime

log = logging.getLogger(__name__)


def psi(j, alpha, r, cap):
    """The terms of exp(alpha u^j / j) whose power of (alpha u^j / j) is a multiple of r:
    sum over r | m of (alpha / j)^m u^(jm) / m!. For r = 2 this is cosh(alpha u^j / j)."""
    require_prime(r)
    if j < 1:
        raise ValueError(f"psi needs j >= 1, got {j}")

    base = Fraction(alpha) / j
    coeffs = [Fraction(0)] * (cap + 1)
    m = 0
    while j * m <= cap:
        coeffs[j * m] = base ** m / factorial(m)
        m += r
    return TruncatedSeries(coeffs, cap)


def _euler_factor(step, cap):
    """1 / (1 - u^step)"""
    return TruncatedSeries([1 if k % step == 0 else 0 for k in range(cap + 1)], cap)


def _one_minus_power(step, cap):
    """1 - u^step"""
    return TruncatedSeries.constant(1, cap) - TruncatedSeries.monomial(1, step, cap)


def _power_class_factor(alpha, r, cap):
    """((1 - u^r)^(1/r) / (1 - u))^alpha times the psi(rj, alpha) factors"""
    result = _one_minus_power(r, cap).pow_rational(Fraction(alpha) / r) * _one_minus_power(1, cap).pow_rational(-alpha)
    for j in range(1, cap // r + 1):
        result = result * psi(r * j, alpha, r, cap)
    return result


def _nonpower_class_factor(alpha, r, cap):
    result = TruncatedSeries.constant(1, cap)
    for j in range(1, cap + 1):
        result = result * psi(j, alpha, r, cap)
    return result


def genfun_prob_wreath(classes, r, cap):
    """1 + sum over n of P_r(G wr S_n) u^n"""
    labeling = nonpower_classes(classes, r)
    alphas = classes.alphas()

    result = TruncatedSeries.constant(1, cap)
    for i in labeling.nonpower_classes:
        result = result * _nonpower_class_factor(alphas[i], r, cap)
    for i in labeling.power_classes:
        result = result * _power_class_factor(alphas[i], r, cap)
    return result


def genfun_prob_sn(r, cap):
    """1 + sum over n of P_r(S_n) u^n"""
    require_prime(r)
    return _power_class_factor(Fraction(1), r, cap)


def genfun_partitions(cap):
    result = TruncatedSeries.constant(1, cap)
    for i in range(1, cap + 1):
        result = result * _euler_factor(i, cap)
    return result


def genfun_p_r(r, cap):
    """P(u^r): every multiplicity divisible by r"""
    require_prime(r)
    return genfun_partitions(cap // r).substitute_power(r).truncate(cap)


def genfun_p_r_prime(r, cap):
    """Product over i of 1 / ((1 - u^(ri-1)) ... (1 - u^(ri-(r-1))) (1 - u^(r^2 i)))"""
    require_prime(r)

    result = TruncatedSeries.constant(1, cap)
    i = 1
    while r * i - (r - 1) <= cap:
        for t in range(1, r):
            if r * i - t <= cap:
                result = result * _euler_factor(r * i - t, cap)
        if r * r * i <= cap:
            result = result * _euler_factor(r * r * i, cap)
        i += 1
    return result


def genfun_cc(s, cap):
    """Number of conjugacy classes of G wr S_n for a G with s classes: P(u)^s"""
    return genfun_partitions(cap) ** s


def genfun_cc_r(classes, r, cap):
    """Number of r-th power classes: P(u^r)^d P_r'(u)^(s-d)"""
    labeling = nonpower_classes(classes, r)
    d = labeling.d
    return genfun_p_r(r, cap) ** d * genfun_p_r_prime(r, cap) ** (classes.num_classes - d)


def check_plateau_series(f, r):
    """Degrees k < cap with k != -1 (mod r) where the coefficient does not stay flat (c_(k+1) != c_k)"""
    require_prime(r)
    return [k for k in range(f.cap) if k % r != r - 1 and f.coeffs[k + 1] != f.coeffs[k]]


def plateau_factorisation(f, r):
    """f (1 - u) / (1 - u^r), and the degrees not divisible by r where it has a nonzero coefficient.

    A flat series in the plateau sense is a series in u^r times (1 - u^r) / (1 - u), so the list is empty."""
    require_prime(r)
    quotient = f * _one_minus_power(1, f.cap) * _euler_factor(r, f.cap)
    stray = [k for k, c in enumerate(quotient.coeffs) if c and k % r != 0]
    return quotient, stray


def genfun_cycle_index(classes, cap, weight=None):
    """The cycle index product over classes i and lengths j of exp(t_ij alpha_i u^j / j), with t_ij = weight(i, j).

    With every weight 1 this is 1 / (1 - u)."""
    alphas = classes.alphas()
    exponent = TruncatedSeries.constant(0, cap)
    for i, alpha in enumerate(alphas):
        for j in range(1, cap + 1):
            t = 1 if weight is None else weight(i, j)
            if t:
                exponent = exponent + TruncatedSeries.monomial(Fraction(t) * alpha / j, j, cap)
    return exponent.exp()


def genfun_cycle_index_sn(cap):
    """Product over i of exp(u^i / i)"""
    exponent = TruncatedSeries([0] + [Fraction(1, i) for i in range(1, cap + 1)], cap)
    return exponent.exp()


def _cosh_monomial(coefficient, degree, cap):
    x = TruncatedSeries.monomial(coefficient, degree, cap)
    return (x.exp() + (-x).exp()) * Fraction(1, 2)


def _ratio_one_plus_over_one_minus(cap):
    """(1 + u) / (1 - u)"""
    one_plus = TruncatedSeries.constant(1, cap) + TruncatedSeries.monomial(1, 1, cap)
    return one_plus * _one_minus_power(1, cap).reciprocal()


def genfun_squares_sn_closed_form(cap):
    """((1 + u) / (1 - u))^(1/2) times the product over k of cosh(u^(2k) / 2k)"""
    result = _ratio_one_plus_over_one_minus(cap).pow_rational(Fraction(1, 2))
    for k in range(1, cap // 2 + 1):
        result = result * _cosh_monomial(Fraction(1, 2 * k), 2 * k, cap)
    return result


def genfun_squares_hyperoctahedral_closed_form(cap):
    """Squares in C_2 wr S_n: ((1 + u) / (1 - u))^(1/4) times cosh(u^j / 2j) cosh(u^(2j) / 4j) over all j"""
    result = _ratio_one_plus_over_one_minus(cap).pow_rational(Fraction(1, 4))
    for j in range(1, cap + 1):
        result = result * _cosh_monomial(Fraction(1, 2 * j), j, cap)
        if 2 * j <= cap:
            result = result * _cosh_monomial(Fraction(1, 4 * j), 2 * j, cap)
    return result
