import pytest

from wreathpow.exc import NotPrimeError
from wreathpow.utils import require_prime


@pytest.mark.parametrize("r", [2, 3, 5, 7, 101])
def test_primes(r):
    assert require_prime(r) == r


@pytest.mark.parametrize("r", [-2, 0, 1, 4, 6, 9, 2.0, "3", True])
def test_not_primes(r):
    with pytest.raises(NotPrimeError):
        require_prime(r)
