"""Pure and compiled mod-p kernels must be interchangeable."""

from __future__ import annotations

import random

import pytest

from locrep import _kernel as kernel
from locrep._kernel import pure

compiled = pytest.importorskip(
    "locrep._kernel._speedups", reason="compiled kernel not built"
)

PRIMES = [2, 3, 5, 7, 13, 101, 32003]


def rand_coeffs(rng: random.Random, p: int, max_deg: int = 7) -> list[int]:
    deg = rng.randint(0, max_deg)
    c = [rng.randrange(p) for _ in range(deg + 1)]
    return c


def test_impl_reports_a_backend():
    assert kernel.IMPL in ("compiled", "pure")


def test_dispatch_exports_match_pure_names():
    for name in ("padd", "psub", "pmul", "pdivmod", "pgcd", "deriv",
                 "eval_mod", "has_root", "is_squarefree",
                 "distinct_degree_partition", "resultant_mod"):
        assert hasattr(kernel, name)
        assert hasattr(pure, name)


@pytest.mark.parametrize("p", PRIMES)
def test_ring_ops_agree(p):
    rng = random.Random(1000 + p)
    for _ in range(60):
        a, b = rand_coeffs(rng, p), rand_coeffs(rng, p)
        assert compiled.padd(a, b, p) == pure.padd(a, b, p)
        assert compiled.psub(a, b, p) == pure.psub(a, b, p)
        assert compiled.pmul(a, b, p) == pure.pmul(a, b, p)
        if pure.trim(b):
            qc, rc = compiled.pdivmod(a, b, p)
            qp, rp = pure.pdivmod(a, b, p)
            assert (qc, rc) == (qp, rp)
            # divmod identity: a = q*b + r with deg r < deg b
            back = pure.padd(pure.pmul(qp, b, p), rp, p)
            assert pure.trim(back) == pure.trim([c % p for c in a])


@pytest.mark.parametrize("p", PRIMES)
def test_gcd_and_deriv_agree(p):
    rng = random.Random(2000 + p)
    for _ in range(60):
        a, b = rand_coeffs(rng, p), rand_coeffs(rng, p)
        assert compiled.pgcd(a, b, p) == pure.pgcd(a, b, p)
        assert compiled.deriv(a, p) == pure.deriv(a, p)
        x = rng.randrange(p)
        assert compiled.eval_mod(a, x, p) == pure.eval_mod(a, x, p)


@pytest.mark.parametrize("p", [3, 7, 13, 101])
def test_root_and_factor_probes_agree(p):
    rng = random.Random(3000 + p)
    for _ in range(80):
        a = rand_coeffs(rng, p)
        if not pure.trim(a):
            continue
        assert compiled.has_root(a, p) == pure.has_root(a, p)
        assert compiled.is_squarefree(a, p) == pure.is_squarefree(a, p)
        if pure.is_squarefree(a, p):
            assert compiled.distinct_degree_partition(a, p) == \
                pure.distinct_degree_partition(a, p)


@pytest.mark.parametrize("p", [3, 7, 101])
def test_resultant_agrees(p):
    rng = random.Random(4000 + p)
    for _ in range(60):
        a, b = rand_coeffs(rng, p), rand_coeffs(rng, p)
        if not pure.trim(a) or not pure.trim(b):
            continue
        assert compiled.resultant_mod(a, b, p) == pure.resultant_mod(a, b, p)


def test_has_root_brute_force():
    rng = random.Random(9)
    for p in (2, 3, 5, 7):
        for _ in range(40):
            a = rand_coeffs(rng, p, 5)
            if not pure.trim(a):
                continue
            brute = any(pure.eval_mod(a, x, p) == 0 for x in range(p))
            assert kernel.has_root(a, p) == brute


def test_partition_matches_root_count():
    # number of 1s in the partition = number of distinct roots
    rng = random.Random(17)
    p = 11
    for _ in range(60):
        a = rand_coeffs(rng, p, 6)
        if not pure.trim(a) or not pure.is_squarefree(a, p):
            continue
        part = kernel.distinct_degree_partition(a, p)
        roots = sum(1 for x in range(p) if pure.eval_mod(a, x, p) == 0)
        assert part.count(1) == roots
        assert sum(part) == len(pure.trim(a)) - 1


def test_large_prime_falls_back_cleanly():
    # dispatch must keep working past the compiled word-size limit
    p = 2**62 + 135  # a prime larger than any machine-word bound
    from locrep.primes import is_prime

    assert is_prime(p)
    a = [p - 2, 0, 1]  # X^2 - 2
    res = kernel.has_root(a, p)
    assert isinstance(res, bool)
    assert kernel.pgcd(a, kernel.deriv(a, p), p) == [1]


def test_pure_env_var_selects_pure(tmp_path):
    import os
    import subprocess
    import sys

    code = "from locrep import _kernel; print(_kernel.IMPL)"
    env = dict(os.environ, LOCREP_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "pure"
