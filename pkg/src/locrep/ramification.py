"""Branch points, multiplicity partitions, and genus accounting.

A degree-n map P^1 -> P^1 given by f = g/h ramifies over the roots of the
X-discriminant of g(X) - t*h(X), an integer polynomial in t recovered here
by interpolation rather than by a bivariate resultant.  Fiber multiplicities
come from squarefree decomposition alone, so conjugate algebraic branch
points never require factoring over an extension field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .exact import (
    INF,
    NoRationalPoint,
    Poly,
    QQ,
    QuadraticExtension,
    RatFunc,
    _fraction_is_square,
    _int_resultant,
    multiplicities,
    poly_from_int_coeffs,
    poly_gcd,
    primitive_int_poly,
    ratfunc_make,
    rational_roots,
    squarefree_part,
    yun_decomposition,
)
from .permgroup import Perm, compose, generate, identity, is_transitive
from .permgroup import ind as perm_ind
from .primes import squarefree_kernel

GENERIC_ALGEBRAIC = "generic-algebraic"


@dataclass(frozen=True)
class BranchData:
    """Ramification summary of a rational map of the given degree.

    partitions holds (key, partition) pairs: a Fraction for each rational
    branch point, INF when the map ramifies over infinity, and the label
    GENERIC_ALGEBRAIC for each irrational irreducible factor of the branch
    polynomial (factors listed in algebraic_factors in the same order; the
    partition is filled for quadratic factors and None beyond that).
    """

    degree: int
    finite_branch_polynomial: Poly
    disc_degree: int
    partitions: tuple[tuple[object, tuple[int, ...] | None], ...]
    infinity_partition: tuple[int, ...]
    algebraic_factors: tuple[Poly, ...] = ()

    @property
    def infinity_is_branch(self) -> bool:
        return any(e > 1 for e in self.infinity_partition)

    def rational_branch_points(self) -> list[Fraction]:
        return [k for k, _ in self.partitions if isinstance(k, Fraction)]

    def partition_at(self, key):
        for k, part in self.partitions:
            if k is key or k == key:
                return part
        raise KeyError(f"no partition recorded at {key}")

    def index_total(self) -> int | None:
        """Sum of ind = degree - #parts over all recorded branch points,
        infinity included; None when some partition is unknown."""
        total = self.degree - len(self.infinity_partition)
        for key, part in self.partitions:
            if key is INF:
                continue
            if part is None:
                return None
            total += self.degree - len(part)
        return total

    def rh_deficit_from_disc(self) -> int:
        """Riemann-Hurwitz deficit computed without any partitions at
        irrational branch points: the t-degree of the X-discriminant equals
        the total index over all finite branch points (points escaping to
        infinity in a degenerating fiber included), so the deficit is
        disc_degree + ind(infinity fiber) - (2n - 2).  Zero certifies the
        genus-0 count even when partitions are only partially known.
        """
        n = self.degree
        return self.disc_degree + (n - len(self.infinity_partition)) - (2 * n - 2)


def _int_disc(coeffs: Sequence[int], n: int) -> int:
    """Discriminant of an integer polynomial of exact degree n >= 1."""
    if n == 1:
        return 1
    dcoeffs = [i * coeffs[i] for i in range(1, n + 1)]
    res = _int_resultant(coeffs, dcoeffs)
    lc = coeffs[n]
    q, rem = divmod(res, lc)
    if rem:
        raise ArithmeticError("discriminant division is not exact")
    return -q if n % 4 in (2, 3) else q


def _integer_model(f: RatFunc) -> tuple[list[int], list[int], int]:
    """(g, h, n) with g/h = f, integer coefficient lists padded to length
    n + 1 where n = deg f.  A single common denominator is cleared so that
    g - t*h stays one polynomial family in t."""
    n = f.degree
    lcm = 1
    for c in list(f.num.coeffs) + list(f.den.coeffs):
        d = c.denominator
        lcm = lcm * d // _gcd(lcm, d)
    g = [int(c * lcm) for c in f.num.coeffs] + [0] * (n + 1 - len(f.num.coeffs))
    h = [int(c * lcm) for c in f.den.coeffs] + [0] * (n + 1 - len(f.den.coeffs))
    return g, h, n


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def discriminant_in_t(f: RatFunc) -> list[int]:
    """Coefficients of disc_X(g(X) - t*h(X)) as a polynomial in t.

    Sampled at 2*deg*(deg-1) + 1 consecutive integers (a range chosen so the
    X-degree never drops), recovered through finite differences, and checked
    against one extra sample.  The t-degree of the result counts the total
    ramification index over all finite branch points.
    """
    g, h, n = _integer_model(f)
    if n < 2:
        raise ValueError("need a map of degree at least 2")
    an, bn = g[n], h[n]
    # the X-degree drops only at t = an/bn; start sampling above it
    start = an // bn + 1 if bn else 0
    count = 2 * n * (n - 1) + 1
    samples = [
        _int_disc([a - (start + j) * b for a, b in zip(g, h)], n) for j in range(count)
    ]

    leads = [samples[0]]
    row = samples
    deg = None
    for r in range(1, count):
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        if not any(row):
            deg = r - 1
            break
        leads.append(row[0])
    if deg is None:
        raise ArithmeticError("discriminant degree exceeds the sample budget")

    # Newton forward form: sum_j lead_j / j! * prod_{i<j} (t - start - i)
    acc = Poly((), QQ)
    basis = Poly([Fraction(1)], QQ)
    fact = 1
    for j in range(deg + 1):
        if leads[j]:
            acc = acc + basis.scale(Fraction(leads[j], fact))
        basis = basis * Poly([Fraction(-(start + j)), Fraction(1)], QQ)
        fact *= j + 1

    out = []
    for c in acc.coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated discriminant is not integral")
        out.append(int(c))
    if not out:
        raise ArithmeticError("identically zero discriminant; g, h not coprime")
    t_check = start + count
    expect = _int_disc([a - t_check * b for a, b in zip(g, h)], n)
    if acc.eval(Fraction(t_check)) != expect:
        raise ArithmeticError("interpolation failed the holdout sample")
    return out


def multiplicity_partition(f: RatFunc, t0) -> tuple[int, ...]:
    """Multiplicities of the full fiber f^{-1}(t0) on P^1, descending.

    For finite t0 these are the root multiplicities of num - t0*den plus the
    point at infinity with multiplicity equal to the degree drop; for
    t0 = INF they are the pole orders (denominator multiplicities plus the
    degree excess of the numerator).
    """
    n = f.degree
    if n < 1:
        raise ValueError("constant maps have no fibers")
    if t0 is INF:
        parts = multiplicities(f.den)
        drop = n - f.den.degree
    else:
        fiber = f.num - f.den.scale(Fraction(t0))
        parts = multiplicities(fiber)
        drop = n - fiber.degree
    if drop > 0:
        parts.append(drop)
    return tuple(sorted(parts, reverse=True))


def multiplicity_partition_at_quadratic(f: RatFunc, minpoly: Poly) -> tuple[int, ...]:
    """Fiber partition over a root of an irreducible monic quadratic in t.

    Both conjugate branch points share one partition, so it is computed in
    Q[tau]/(minpoly) without ever naming a root."""
    m = minpoly.monic()
    if m.degree != 2:
        raise ValueError("expected a quadratic minimal polynomial")
    K = QuadraticExtension(m.coeffs[1], m.coeffs[0])
    num = Poly([K.coerce(c) for c in f.num.coeffs], K)
    den = Poly([K.coerce(c) for c in f.den.coeffs], K)
    fiber = num - den.scale(K.tau)
    parts = multiplicities(fiber)
    drop = f.degree - fiber.degree
    if drop > 0:
        parts.append(drop)
    return tuple(sorted(parts, reverse=True))


def _positive_primitive(a: Poly) -> Poly:
    ints = primitive_int_poly(a)
    if ints and ints[-1] < 0:
        ints = [-c for c in ints]
    return poly_from_int_coeffs(ints)


def critical_values(f: RatFunc) -> BranchData:
    """Branch points of f with fiber partitions.

    Partitions are attached to every rational branch point, to infinity when
    it ramifies, and to irrational branch points through the irreducible
    factor of the branch polynomial (quadratic factors only; higher-degree
    factors are reported with partition None and still enter the
    Riemann-Hurwitz count via rh_deficit_from_disc).
    """
    if f.degree < 2:
        raise ValueError("need a map of degree at least 2")
    disc = discriminant_in_t(f)
    disc_degree = len(disc) - 1
    branch = _positive_primitive(squarefree_part(poly_from_int_coeffs(disc)))
    if branch.degree < 1:
        raise ArithmeticError("a degree >= 2 map must have a finite branch point")

    roots = sorted(rational_roots(branch))
    entries: list[tuple[object, tuple[int, ...] | None]] = [
        (r, multiplicity_partition(f, r)) for r in roots
    ]
    cof = branch
    for r in roots:
        cof = cof // Poly([-r, Fraction(1)], QQ)
    cof = cof.monic()
    factors: list[Poly] = []
    if cof.degree == 2:
        entries.append((GENERIC_ALGEBRAIC, multiplicity_partition_at_quadratic(f, cof)))
        factors.append(_positive_primitive(cof))
    elif cof.degree > 2:
        entries.append((GENERIC_ALGEBRAIC, None))
        factors.append(_positive_primitive(cof))

    inf_part = multiplicity_partition(f, INF)
    if any(e > 1 for e in inf_part):
        entries.append((INF, inf_part))
    return BranchData(
        degree=f.degree,
        finite_branch_polynomial=branch,
        disc_degree=disc_degree,
        partitions=tuple(entries),
        infinity_partition=inf_part,
        algebraic_factors=tuple(factors),
    )


def rh_verify(partitions: Sequence[Sequence[int]]) -> int:
    """Riemann-Hurwitz deficit sum(n - #parts) - (2n - 2) for partitions of
    a common n; zero certifies a consistent genus-0 ramification datum."""
    parts = [tuple(p) for p in partitions]
    if not parts:
        raise ValueError("need at least one partition")
    n = sum(parts[0])
    for p in parts:
        if not p or any(e < 1 for e in p):
            raise ValueError("partition entries must be positive")
        if sum(p) != n:
            raise ValueError("partitions of unequal totals")
    return sum(n - len(p) for p in parts) - (2 * n - 2)


def verify_branch_cycle_tuple(perms: Sequence[Perm]) -> dict:
    """Check a candidate branch cycle description sigma_1, ..., sigma_r.

    Returns {product_identity, transitive, rh_deficit}; the tuple describes
    a degree-n genus-0 cover iff the product (right factor applied first) is
    the identity, the group generated is transitive, and the deficit is 0.
    """
    ps = [tuple(s) for s in perms]
    if not ps:
        raise ValueError("empty tuple")
    n = len(ps[0])
    if any(len(s) != n for s in ps):
        raise ValueError("permutations of unequal degree")
    prod = identity(n)
    for s in ps:
        prod = compose(prod, s)
    return {
        "product_identity": prod == identity(n),
        "transitive": is_transitive(generate(ps)),
        "rh_deficit": sum(perm_ind(s) for s in ps) - (2 * n - 2),
    }


def galois_closure_genus(order: int, indices: Sequence[int]) -> Fraction:
    """Genus of the Galois closure from 2g - 2 = order * (-2 + sum(1 - 1/e)).

    Exact rational output; a non-integral or negative value flags an
    inconsistent (order, ramification indices) pair."""
    if order < 1:
        raise ValueError("group order must be positive")
    total = Fraction(-2)
    for e in indices:
        if e < 2:
            raise ValueError("ramification indices must be at least 2")
        total += 1 - Fraction(1, e)
    return 1 + Fraction(order) * total / 2


def quadratic_resolvent(f: RatFunc) -> Poly:
    """Squarefree part of disc_X(g - t*h), normalized to integer
    coefficients with content 1 and positive leading coefficient.

    This normalization fixes one representative per radical; constant
    factors of the discriminant (sign included) are dropped, so use
    disc_square_class when the true square class matters."""
    disc = discriminant_in_t(f)
    return _positive_primitive(squarefree_part(poly_from_int_coeffs(disc)))


def disc_square_class(f: RatFunc) -> Poly:
    """Integer polynomial representing disc_X(g - t*h) modulo nonzero
    rational-function squares, sign and constant class preserved.

    The odd-multiplicity part of the discriminant is kept and the leftover
    rational constant is reduced by its squarefree kernel, so the fixed
    field of the even-permutation part of the monodromy is Q(t, sqrt(D))
    for the returned D."""
    disc = poly_from_int_coeffs(discriminant_in_t(f))
    odd = Poly([Fraction(1)], QQ)
    for factor, mult in yun_decomposition(disc):
        if mult % 2:
            odd = odd * factor
    ints = primitive_int_poly(odd)
    lc = disc.lc
    unit = lc.numerator * lc.denominator * ints[-1]
    core, _ = squarefree_kernel(unit)
    return poly_from_int_coeffs([core * c for c in ints])


def square_class_equal(a: Poly, b: Poly) -> bool:
    """True iff a/b is the square of a rational function, i.e. a and b cut
    out the same quadratic extension of Q(t)."""
    if a.is_zero() or b.is_zero():
        raise ValueError("square classes are defined for nonzero polynomials")
    prod = a * b
    if any(mult % 2 for _, mult in yun_decomposition(prod)):
        return False
    return _fraction_is_square(prod.lc)


def _fraction_sqrt(x: Fraction) -> Fraction:
    return Fraction(isqrt(x.numerator), isqrt(x.denominator))


def _conic_point(D: Poly, height: int) -> tuple[Fraction, Fraction]:
    """Rational point (t0, y0) on y^2 = D(t), smallest denominator first."""
    for r in sorted(rational_roots(D)):
        return r, Fraction(0)
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            if _gcd(p, q) != 1:
                continue
            t0 = Fraction(p, q)
            v = D.eval(t0)
            if v >= 0 and _fraction_is_square(v):
                return t0, _fraction_sqrt(v)
    raise NoRationalPoint(
        f"no rational point on y^2 = D(t) with height up to {height}"
    )


def quadratic_companion(D: Poly, search_height: int = 60) -> RatFunc:
    """Degree-2 rational map whose X-discriminant in t is exactly 4*D(t).

    For D = A t^2 + B t + C a rational point (t0, y0) on y^2 = D(t) gives
    f = (t0 X^2 - 2 y0 X + (A t0 + B)) / (X^2 - A); the fiber discriminant
    identity disc_X(num - t*den) = 4 D(t) holds on the nose, so the square
    class of D is realized with its sign and constant intact.  Raises
    NoRationalPoint when the conic search budget is exhausted.
    """
    if D.is_zero() or not 1 <= D.degree <= 2:
        raise ValueError("D must have degree 1 or 2")
    if poly_gcd(D, D.derivative()).degree > 0:
        raise ValueError("D must be squarefree")
    if D.degree == 1:
        b, c = D.coeffs[1], D.coeffs[0]
        return ratfunc_make(Poly([-c / b, Fraction(0), b], QQ), Poly([Fraction(1)], QQ))
    A, B = D.coeffs[2], D.coeffs[1]
    t0, y0 = _conic_point(D, search_height)
    num = Poly([A * t0 + B, -2 * y0, t0], QQ)
    den = Poly([-A, Fraction(0), Fraction(1)], QQ)
    f = ratfunc_make(num, den)
    if f.degree != 2:
        raise ArithmeticError("companion construction degenerated")
    return f
