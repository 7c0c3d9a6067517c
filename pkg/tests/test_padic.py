"""Exact Z_p / Q_p solvability decisions and bad-prime bookkeeping."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from locrep.exact import (
    INF,
    BadPrime,
    Poly,
    degree_partition_mod_p,
    poly_from_ints,
    primitive_int_poly,
    ratfunc_eval,
    ratfunc_from_ints,
    squarefree_part,
)
from locrep.padic import (
    BadPrimeSet,
    bad_primes,
    is_kp_value,
    qp_root_exists,
    zp_root_exists,
)
from locrep.primes import primes_up_to

import oracles


def vp(n: int, p: int) -> int:
    v = 0
    while n and n % p == 0:
        n //= p
        v += 1
    return v


class TestZpRoots:
    def test_square_root_of_two(self):
        assert zp_root_exists(poly_from_ints([-2, 0, 1]), 7).solvable
        assert not zp_root_exists(poly_from_ints([-2, 0, 1]), 5).solvable

    def test_odd_valuation_obstruction(self):
        for p in (3, 7, 11):
            assert not zp_root_exists(poly_from_ints([-p, 0, 1]), p).solvable

    def test_non_integral_coefficients_rejected(self):
        F = Poly([Fraction(1, 7), Fraction(1)])
        with pytest.raises(BadPrime):
            zp_root_exists(F, 7)
        assert zp_root_exists(F, 5).solvable

    def test_linear_integrality(self):
        assert not zp_root_exists(poly_from_ints([-1, 7]), 7).solvable
        assert zp_root_exists(poly_from_ints([-7, 1]), 7).solvable
        assert zp_root_exists(poly_from_ints([-1, 7]), 3).solvable

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ValueError):
            zp_root_exists(poly_from_ints([0]), 5)

    def test_constant_has_no_root(self):
        assert not zp_root_exists(poly_from_ints([3]), 5).solvable

    def test_deep_descent_wild_two(self):
        # 4X^2 - 1 needs the reversal for Q_2 but has no Z_2 root
        assert not zp_root_exists(poly_from_ints([-1, 0, 4]), 2).solvable
        # X^2 - 17 is a 2-adic square (17 = 1 mod 16)
        assert zp_root_exists(poly_from_ints([-17, 0, 1]), 2).solvable
        assert not zp_root_exists(poly_from_ints([-5, 0, 1]), 2).solvable

    def test_witness_certifies_hensel_inequality(self):
        rng = random.Random(77)
        checked = 0
        while checked < 60:
            coeffs = [rng.randint(-20, 20) for _ in range(rng.randint(2, 6))]
            F = poly_from_ints(coeffs)
            if F.degree < 1:
                continue
            p = rng.choice([2, 3, 5, 7, 13])
            dec = zp_root_exists(F, p)
            if not dec.solvable:
                continue
            r, k, v = dec.witness
            S = primitive_int_poly(squarefree_part(F))
            val = sum(c * r**i for i, c in enumerate(S))
            dval = sum(i * c * r ** (i - 1) for i, c in enumerate(S) if i)
            assert val == 0 or vp(val, p) >= k
            assert dval != 0 and vp(dval, p) == v
            assert k > 2 * v
            checked += 1

    def test_agrees_with_enumeration_oracle(self):
        rng = random.Random(501)
        done = 0
        while done < 300:
            coeffs = [rng.randint(-20, 20) for _ in range(rng.randint(2, 6))]
            F = poly_from_ints(coeffs)
            if F.degree < 1:
                continue
            sf = primitive_int_poly(squarefree_part(F))
            if len(sf) < 2:
                continue
            p = rng.choice([2, 3, 5, 7, 11, 13])
            ours = zp_root_exists(F, p).solvable
            theirs = oracles.zp_root_oracle(sf, p)
            assert ours == theirs
            done += 1


class TestQpRoots:
    def test_inverse_of_prime(self):
        for p in (2, 5, 13):
            assert qp_root_exists(poly_from_ints([-1, p]), p).solvable

    def test_square_root_of_minus_one(self):
        assert qp_root_exists(poly_from_ints([1, 0, 1]), 13).solvable
        assert not qp_root_exists(poly_from_ints([1, 0, 1]), 7).solvable

    def test_reversal_model_flagged(self):
        dec = qp_root_exists(poly_from_ints([-1, 0, 4]), 2)
        assert dec.solvable
        assert dec.model == "reversal"

    def test_rational_coefficients_cleared(self):
        F = Poly([Fraction(-1, 3), Fraction(1)])
        assert qp_root_exists(F, 3).solvable


class TestKpValue:
    def test_spec_triples(self):
        assert is_kp_value(ratfunc_from_ints([0, 0, 1]), 2, 7)
        assert is_kp_value(ratfunc_from_ints([1], [1, 0, -1]), 2, 7)

    def test_icosahedral_value_fixture(self):
        f1 = ratfunc_from_ints([125, 750, 1575, 1300, 315, 30, 1], [0, 1])
        assert is_kp_value(f1, 1728, 101)

    def test_value_at_infinity_is_exact(self):
        f = ratfunc_from_ints([2, 0, 1], [-2, 0, 1])
        # f(inf) = 1: true at every p by the exact check, including bad ones
        for p in (2, 3, 5, 7, 1009):
            assert is_kp_value(f, 1, p)

    def test_infinity_target(self):
        poly = ratfunc_from_ints([0, 0, 0, 1])
        assert is_kp_value(poly, INF, 5)
        f = ratfunc_from_ints([1], [2, 1])  # pole at -2
        assert is_kp_value(f, INF, 7)
        g = ratfunc_from_ints([1, 0, 1], [3, 0, 1])  # poles need sqrt(-3)
        assert is_kp_value(g, INF, 7)  # -3 is a square mod 7
        assert not is_kp_value(g, INF, 5)

    def test_degenerate_fiber(self):
        f = ratfunc_from_ints([1, 1], [1, 1])  # constant 1
        assert is_kp_value(f, 1, 5)
        assert not is_kp_value(f, 2, 5)

    def test_good_prime_equivalence_with_mod_p_factorization(self):
        rng = random.Random(815)
        done = 0
        while done < 500:
            num = [rng.randint(-9, 9) for _ in range(rng.randint(2, 5))]
            den = [rng.randint(-9, 9) for _ in range(rng.randint(1, 4))]
            f_num = poly_from_ints(num)
            f_den = poly_from_ints(den)
            if f_num.degree < 1 or f_den.is_zero():
                continue
            f = ratfunc_from_ints(num, den)
            if f.degree < 1:
                continue
            t0 = Fraction(rng.randint(-10, 10))
            p = rng.choice([3, 5, 7, 11, 13, 17])
            if bad_primes([f], t0).contains(p):
                continue
            fiber = f.num - f.den.scale(t0)
            if fiber.degree < 1:
                continue
            # content of the fiber may soak up p; partition the primitive model
            prim = poly_from_ints(primitive_int_poly(fiber))
            expected = ratfunc_eval(f, INF) == t0 or 1 in degree_partition_mod_p(
                prim, p
            )
            assert is_kp_value(f, t0, p) == expected
            done += 1

    def test_quadratic_reciprocity_density(self):
        f = ratfunc_from_ints([0, 0, 1])
        for t0 in (2, 3):
            hits = total = 0
            for p in primes_up_to(10**4):
                if p == 2 or t0 % p == 0:
                    continue
                total += 1
                hits += is_kp_value(f, t0, p)
            assert abs(hits / total - 0.5) < 0.05


class TestBadPrimes:
    def test_square_at_two(self):
        bad = bad_primes([ratfunc_from_ints([0, 0, 1])], 2)
        assert bad.contains(2)
        for p in (3, 5, 7, 11):
            assert not bad.contains(p)

    def test_cube_at_four(self):
        bad = bad_primes([ratfunc_from_ints([0, 0, 0, 1])], 4)
        assert bad.upto(100) == [2, 3]

    def test_intro_triple(self):
        fs = [
            ratfunc_from_ints([0, 0, 1]),
            ratfunc_from_ints([1, 0, 1]),
            ratfunc_from_ints([1], [1, 0, -1]),
        ]
        bad = bad_primes(fs, 2)
        known, complete = bad.try_enumerate()
        assert complete
        assert set(known) <= {2, 3}
        assert 2 in known

    def test_denominator_counts(self):
        bad = bad_primes([ratfunc_from_ints([0, 0, 1])], Fraction(1, 6))
        assert bad.contains(2) and bad.contains(3)
        assert "denominator" in bad.reasons_for(3)

    def test_constant_target_rejected(self):
        f = ratfunc_from_ints([5], [1])
        with pytest.raises(ValueError):
            bad_primes([f], 5)

    def test_try_enumerate_reports_incompleteness(self):
        big = (10**12 + 39) * (10**12 + 61)
        bad = BadPrimeSet(((4 * big, "discriminant"),))
        known, complete = bad.try_enumerate(bound=10**4)
        assert known == (2,)
        assert not complete
