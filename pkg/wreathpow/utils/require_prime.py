from sympy import isprime

from wreathpow.exc import NotPrimeError


def require_prime(r):
    """Raise NotPrimeError unless r is a prime number. Returns r so it can be used inline."""
    if not isinstance(r, int) or isinstance(r, bool) or not isprime(r):
        raise NotPrimeError(f"r = {r} is not a prime; class-level formulas only hold for prime exponents")
    return r
