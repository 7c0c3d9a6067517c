"""Branch points, partitions, Riemann-Hurwitz counts, quadratic resolvents."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from locrep.exact import (
    INF,
    NoRationalPoint,
    Poly,
    disc,
    moebius_conjugate,
    poly_from_ints,
    ratfunc_from_ints,
    ratfunc_make,
)
from locrep.permgroup import perm_from_cycles
from locrep.ramification import (
    critical_values,
    disc_square_class,
    galois_closure_genus,
    multiplicity_partition,
    quadratic_companion,
    quadratic_resolvent,
    rh_verify,
    square_class_equal,
    verify_branch_cycle_tuple,
)

import oracles

T3 = ratfunc_from_ints([0, -3, 0, 4])
SEXTIC = ratfunc_from_ints([0, 0, 0, 0, 0, -6, 5])  # X^5(5X-6)
ICOSA_F1 = ratfunc_from_ints([125, 750, 1575, 1300, 315, 30, 1], [0, 1])


class TestCriticalValues:
    def test_pure_power(self):
        bd = critical_values(ratfunc_from_ints([0, 0, 0, 0, 1]))
        assert bd.rational_branch_points() == [Fraction(0)]
        assert bd.partition_at(Fraction(0)) == (4,)
        assert bd.infinity_partition == (4,)
        assert bd.infinity_is_branch

    def test_icosahedral_numerator(self):
        bd = critical_values(ICOSA_F1)
        assert sorted(bd.rational_branch_points()) == [0, 1728]
        assert bd.infinity_is_branch

    def test_chebyshev_cubic(self):
        bd = critical_values(T3)
        assert sorted(bd.rational_branch_points()) == [-1, 1]

    def test_degree_one_rejected(self):
        with pytest.raises(ValueError):
            critical_values(ratfunc_from_ints([0, 1]))

    def test_branch_point_iff_ramified_partition(self):
        for f in (T3, SEXTIC, ICOSA_F1):
            bd = critical_values(f)
            for t0 in bd.rational_branch_points():
                assert any(e > 1 for e in multiplicity_partition(f, t0))
            # nearby integers are unramified
            for t0 in (Fraction(4), Fraction(-7)):
                if t0 not in bd.rational_branch_points():
                    part = multiplicity_partition(f, t0)
                    assert all(e == 1 for e in part)


class TestMultiplicityPartition:
    def test_sextic_fixtures(self):
        assert sorted(multiplicity_partition(SEXTIC, Fraction(0)), reverse=True) == [5, 1]
        assert sorted(multiplicity_partition(SEXTIC, Fraction(-1)), reverse=True) == [2, 1, 1, 1, 1]
        assert multiplicity_partition(SEXTIC, INF) == (6,)

    def test_partition_sums_to_degree(self):
        rng = random.Random(4)
        for f in (T3, SEXTIC, ICOSA_F1):
            for _ in range(10):
                t0 = Fraction(rng.randint(-30, 30), rng.randint(1, 10))
                assert sum(multiplicity_partition(f, t0)) == f.degree

    def test_infinity_pole_structure(self):
        f = ratfunc_from_ints([1], [0, 0, 1])  # 1/X^2
        assert multiplicity_partition(f, INF) == (2,)
        g = ratfunc_from_ints([1], [0, -1, 0, 1])  # 1/(X^3 - X)
        assert sorted(multiplicity_partition(g, INF)) == [1, 1, 1]


class TestRiemannHurwitz:
    def test_spec_rows(self):
        assert rh_verify([[5, 1], [2, 1, 1, 1, 1], [6]]) == 0
        assert rh_verify([[2], [2]]) == 0
        assert rh_verify([[5, 1], [6]]) == -1

    def test_rejects_mixed_totals(self):
        with pytest.raises(ValueError):
            rh_verify([[2, 1], [2]])

    def test_catalog_style_index_totals(self):
        # recorded branch partitions exhaust 2 deg - 2 exactly
        for f in (T3, SEXTIC, ICOSA_F1, ratfunc_from_ints([0, 0, 1])):
            bd = critical_values(f)
            assert bd.rh_deficit_from_disc() == 0


class TestBranchCycleTuples:
    def test_sextic_triple(self):
        s1 = perm_from_cycles(6, [(0, 1, 2, 3, 4)])
        s2 = perm_from_cycles(6, [(4, 5)])
        # third factor chosen as the inverse of the product of the first two
        s3 = perm_from_cycles(6, [(5, 4, 3, 2, 1, 0)])
        out = verify_branch_cycle_tuple([s1, s2, s3])
        assert out == {"product_identity": True, "transitive": True, "rh_deficit": 0}

    def test_cubic_pair(self):
        a = perm_from_cycles(3, [(0, 1, 2)])
        b = perm_from_cycles(3, [(0, 2, 1)])
        out = verify_branch_cycle_tuple([a, b])
        assert out["product_identity"] and out["transitive"]
        assert out["rh_deficit"] == 0

    def test_intransitive_pair(self):
        t = perm_from_cycles(3, [(0, 1)])
        out = verify_branch_cycle_tuple([t, t])
        assert out["product_identity"]
        assert not out["transitive"]


class TestGaloisClosureGenus:
    def test_genus_zero_families(self):
        n = 6
        assert galois_closure_genus(n, (n, n)) == 0
        assert galois_closure_genus(2 * n, (n, 2, 2)) == 0
        assert galois_closure_genus(12, (2, 3, 3)) == 0
        assert galois_closure_genus(24, (2, 3, 4)) == 0
        assert galois_closure_genus(60, (2, 3, 5)) == 0

    def test_genus_one_families(self):
        assert galois_closure_genus(4, (2, 2, 2, 2)) == 1
        assert galois_closure_genus(9, (3, 3, 3)) == 1
        assert galois_closure_genus(8, (2, 4, 4)) == 1
        assert galois_closure_genus(6, (2, 3, 6)) == 1
        # genus 1 tuples stay genus 1 at any group order
        assert galois_closure_genus(600, (2, 3, 6)) == 1

    def test_invalid_inputs(self):
        with pytest.raises(ValueError):
            galois_closure_genus(0, (2, 2))
        with pytest.raises(ValueError):
            galois_closure_genus(4, (1, 2))


class TestQuadraticResolvent:
    def test_square_map(self):
        D = quadratic_resolvent(ratfunc_from_ints([0, 0, 1]))
        assert D == poly_from_ints([0, 1])

    def test_twisted_square(self):
        f = ratfunc_from_ints([1, 0, 1], [-1, 0, 1])
        D = quadratic_resolvent(f)
        assert square_class_equal(D, poly_from_ints([-1, 0, 1]))

    def test_chebyshev(self):
        D = quadratic_resolvent(T3)
        assert square_class_equal(D, poly_from_ints([-1, 0, 1]))

    def test_sign_true_variant(self):
        # disc(4X^3 - 3X - t) = 27(1 - t^2): positive between the branch
        # points, so the signed class is 3(1 - t^2), not t^2 - 1
        D = disc_square_class(T3)
        assert square_class_equal(D, poly_from_ints([3, 0, -3]))
        assert not square_class_equal(D, poly_from_ints([-1, 0, 1]))
        assert D.eval(Fraction(0)) > 0


class TestQuadraticCompanion:
    def test_linear_class(self):
        f = quadratic_companion(poly_from_ints([0, 1]))
        assert f.degree == 2
        assert square_class_equal(quadratic_resolvent(f), poly_from_ints([0, 1]))

    def test_hyperbolic_class(self):
        D = poly_from_ints([-1, 0, 1])
        f = quadratic_companion(D)
        assert square_class_equal(disc_square_class(f), D)

    def test_twisted_classes(self):
        for c in (2, 3, -1):
            D = poly_from_ints([-c, 0, c])  # c(t^2 - 1)
            f = quadratic_companion(D)
            assert f.degree == 2
            assert square_class_equal(disc_square_class(f), D)

    def test_round_trip_on_random_classes(self):
        rng = random.Random(99)
        done = 0
        while done < 100:
            coeffs = [rng.randint(-9, 9) for _ in range(3)]
            D = poly_from_ints(coeffs)
            if D.degree < 1:
                continue
            if D.degree == 2 and disc(D) == 0:
                continue
            try:
                f = quadratic_companion(D)
            except NoRationalPoint:
                # anisotropic conic: no degree-2 map can carry this class
                done += 1
                continue
            assert square_class_equal(disc_square_class(f), D)
            done += 1

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            quadratic_companion(poly_from_ints([1]))
        with pytest.raises(ValueError):
            quadratic_companion(poly_from_ints([0, 0, 0, 1]))


class TestMoebiusInvariance:
    def test_partitions_survive_conjugation(self):
        lam = ratfunc_from_ints([-1, 1], [1, 1])
        ident = ratfunc_from_ints([0, 1])
        for f in (T3, SEXTIC):
            g = moebius_conjugate(f, ident, lam)  # precompose: same fibers
            assert g.degree == f.degree
            for t0 in critical_values(f).rational_branch_points():
                assert sorted(multiplicity_partition(g, t0)) == sorted(
                    multiplicity_partition(f, t0))

    def test_postcompose_moves_branch_points(self):
        # t -> t + 1 on the target shifts every branch point by one
        shift = ratfunc_from_ints([1, 1])
        ident = ratfunc_from_ints([0, 1])
        g = moebius_conjugate(T3, shift, ident)
        pts = sorted(critical_values(g).rational_branch_points())
        assert pts == [0, 2]


class TestDiscCrossCheck:
    def test_fiber_disc_matches_oracle(self):
        rng = random.Random(12)
        for f in (T3, SEXTIC):
            for _ in range(8):
                t0 = Fraction(rng.randint(-20, 20))
                fiber = f.num - f.den.scale(t0)
                ours = disc(fiber)
                theirs = oracles.discriminant([Fraction(c) for c in fiber.coeffs])
                assert ours == theirs
