"""Prime sieve, primality, and trial-division helpers."""

from __future__ import annotations

from sympy import isprime as sympy_isprime, primerange

from locrep.primes import (
    factor_trial,
    is_prime,
    next_prime,
    primes_up_to,
    sieve,
    squarefree_kernel,
)


def test_sieve_matches_reference():
    assert sieve(100) == list(primerange(2, 101))
    assert sieve(1) == []
    assert sieve(2) == [2]


def test_is_prime_small_range():
    for n in range(-5, 500):
        assert is_prime(n) == (n >= 2 and sympy_isprime(n))


def test_is_prime_large():
    assert is_prime(2**31 - 1)
    assert not is_prime(2**31)
    assert is_prime(10**12 + 39)


def test_next_prime():
    assert next_prime(2) == 3
    assert next_prime(13) == 17
    assert next_prime(1) == 2
    assert next_prime(89) == 97


def test_primes_up_to_is_single_use_iterator():
    it = primes_up_to(30)
    first = list(it)
    assert first == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert list(it) == []


def test_factor_trial():
    factors, cofactor = factor_trial(2**3 * 3 * 49)
    assert factors == {2: 3, 3: 1, 7: 2}
    assert cofactor == 1
    big = 10**12 + 39  # prime: the cofactor primality check picks it up whole
    factors, cofactor = factor_trial(4 * big, bound=1000)
    assert factors == {2: 2, big: 1}
    assert cofactor == 1
    # a semiprime cofactor beyond the bound stays unfactored
    big2 = 10**12 + 61
    assert sympy_isprime(big2)
    factors, cofactor = factor_trial(4 * big * big2, bound=1000)
    assert factors == {2: 2}
    assert cofactor == big * big2


def test_squarefree_kernel():
    assert squarefree_kernel(12) == (3, True)
    assert squarefree_kernel(-18) == (-2, True)
    assert squarefree_kernel(1) == (1, True)
