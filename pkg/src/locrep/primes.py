"""Small prime utilities shared by the scanning and p-adic modules.

Nothing here is clever: sieve, deterministic Miller-Rabin for 64-bit
inputs, and bounded trial division that reports its unfactored cofactor
instead of pretending to finish.
"""

from __future__ import annotations

from typing import Iterator

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Witness set proven sufficient for n < 3.3 * 10^24.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def sieve(bound: int) -> list[int]:
    """Primes p <= bound, ascending."""
    if bound < 2:
        return []
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= bound:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return [i for i, f in enumerate(flags) if f]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than n."""
    k = n + 1
    if k <= 2:
        return 2
    if k % 2 == 0:
        k += 1
    while not is_prime(k):
        k += 2
    return k


def primes_up_to(bound: int) -> Iterator[int]:
    yield from sieve(bound)


def factor_trial(n: int, bound: int = 10**6) -> tuple[dict[int, int], int]:
    """Factor |n| by trial division up to `bound`.

    Returns (exponents, cofactor) with n = sign * prod(p^e) * cofactor and
    every prime factor of the cofactor > bound. cofactor = 1 means complete.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # Wheel over 6k +- 1.
    q = 7
    step = 4
    while q <= bound and q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += step
        step = 6 - step
    if 1 < n and (n <= bound * bound or is_prime(n)):
        # Trial division exhausted below sqrt(n): n is prime.
        out[n] = out.get(n, 0) + 1
        n = 1
    return out, n


def squarefree_kernel(n: int, bound: int = 10**6) -> tuple[int, bool]:
    """Squarefree part of n (sign preserved): product of primes with odd
    exponent. Second value reports completeness; if the unfactored cofactor
    is not 1 or a perfect square it is included whole and the flag is False.
    """
    if n == 0:
        raise ValueError("0 has no squarefree part")
    sign = -1 if n < 0 else 1
    factors, cofactor = factor_trial(n, bound)
    core = sign
    for p, e in factors.items():
        if e % 2:
            core *= p
    if cofactor == 1:
        return core, True
    root = _isqrt(cofactor)
    if root * root == cofactor:
        return core, True
    return core * cofactor, False


def _isqrt(n: int) -> int:
    import math

    return math.isqrt(n)
