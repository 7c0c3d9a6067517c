"""Exact arithmetic: rationals, polynomials over Q / F_p / quadratic
extensions of Q, and rational functions in one variable.

Polynomials store coefficients lowest degree first with no trailing zeros;
the empty tuple is the zero polynomial. Rational functions keep numerator
and denominator coprime with a monic denominator, so representations are
canonical and equality is structural.

Resultants over Q run through the subresultant polynomial remainder
sequence on cleared integer coefficients; gcds over Q run through the
primitive PRS. Both avoid rational blowup and are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _igcd
from typing import Iterable, Sequence

from . import _kernel
from .primes import is_prime, next_prime

Rat = Fraction


class _Infinity:
    """The point at infinity on the projective line over Q."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


class BadPrime(ValueError):
    """Raised when a reduction mod p is undefined (denominator or leading
    coefficient vanishes)."""


class NoRationalPoint(ValueError):
    """Raised when a conic search exhausts its budget without a point."""


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def coerce(x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def is_zero(a) -> bool:
        return a == 0


QQ = RationalField()


class PrimeField:
    """F_p with int elements in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x) -> int:
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise BadPrime(f"denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in " + self.name)
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return (-a) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


_GF_CACHE: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _GF_CACHE:
        _GF_CACHE[p] = PrimeField(p)
    return _GF_CACHE[p]


class QuadraticExtension:
    """Q[tau] / (tau^2 + b tau + c) for an irreducible monic quadratic.

    Elements are pairs (a0, a1) of Fractions meaning a0 + a1 tau. Used to
    evaluate ramification data at conjugate quadratic branch points.
    """

    def __init__(self, b: Fraction, c: Fraction):
        b, c = Fraction(b), Fraction(c)
        disc = b * b - 4 * c
        if _fraction_is_square(disc):
            raise ValueError("modulus is reducible over Q")
        self.b, self.c = b, c
        self.name = f"QQ[tau]/(tau^2+{b}*tau+{c})"
        self.zero = (Fraction(0), Fraction(0))
        self.one = (Fraction(1), Fraction(0))
        self.tau = (Fraction(0), Fraction(1))

    def coerce(self, x):
        if isinstance(x, tuple):
            return (Fraction(x[0]), Fraction(x[1]))
        return (Fraction(x), Fraction(0))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def mul(self, x, y):
        # tau^2 = -b tau - c
        hi = x[1] * y[1]
        return (x[0] * y[0] - self.c * hi, x[0] * y[1] + x[1] * y[0] - self.b * hi)

    def neg(self, a):
        return (-a[0], -a[1])

    def inv(self, a):
        n = a[0] * a[0] - self.b * a[0] * a[1] + self.c * a[1] * a[1]
        if n == 0:
            raise ZeroDivisionError("zero element in " + self.name)
        return ((a[0] - self.b * a[1]) / n, -a[1] / n)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a[0] == 0 and a[1] == 0


def _fraction_is_square(x: Fraction) -> bool:
    if x < 0:
        return False
    from math import isqrt

    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    return rn * rn == n and rd * rd == d


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense univariate polynomial over a coefficient field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs: Iterable, field=QQ, *, normalize: bool = True):
        if normalize:
            cs = [field.coerce(c) for c in coeffs]
            while cs and field.is_zero(cs[-1]):
                cs.pop()
            self.coeffs = tuple(cs)
        else:
            self.coeffs = tuple(coeffs)
        self.field = field

    # degree of the zero polynomial is -1 by convention
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __add__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(out, f)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + other.scale(self.field.neg(self.field.one))

    def __mul__(self, other: "Poly") -> "Poly":
        f = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), f)
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if f.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(x, y))
        return Poly(out, f)

    def scale(self, s) -> "Poly":
        f = self.field
        s = f.coerce(s)
        if f.is_zero(s):
            return Poly((), f)
        return Poly([f.mul(c, s) for c in self.coeffs], f)

    def shift(self, k: int) -> "Poly":
        """Multiply by X^k."""
        if self.is_zero():
            return self
        return Poly([self.field.zero] * k + list(self.coeffs), self.field, normalize=False)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly((), f), self
        rem = list(self.coeffs)
        dlc = other.lc
        dd = other.degree
        q = [f.zero] * (len(rem) - dd)
        for i in range(len(rem) - dd - 1, -1, -1):
            c = f.div(rem[i + dd], dlc)
            if f.is_zero(c):
                continue
            q[i] = c
            for j, oc in enumerate(other.coeffs):
                rem[i + j] = f.sub(rem[i + j], f.mul(c, oc))
        return Poly(q, f), Poly(rem[:dd], f)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.div(self.field.one, self.lc))

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(
            [f.mul(c, f.coerce(i)) for i, c in enumerate(self.coeffs) if i >= 1], f
        )

    def eval(self, x):
        f = self.field
        x = f.coerce(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose(self, other: "Poly") -> "Poly":
        f = self.field
        acc = Poly((), f)
        for c in reversed(self.coeffs):
            acc = acc * other + Poly([c], f)
        return acc


def poly_from_ints(coeffs: Sequence[int], field=QQ) -> Poly:
    return Poly(coeffs, field)


def X(field=QQ) -> Poly:
    return Poly([field.zero, field.one], field)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0 by convention."""
    if a.field is QQ and b.field is QQ:
        return _poly_gcd_qq(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def _poly_gcd_qq(a: Poly, b: Poly) -> Poly:
    if a.is_zero():
        return b.monic() if not b.is_zero() else b
    if b.is_zero():
        return a.monic()
    A, _ = clear_denominators(a)
    B, _ = clear_denominators(b)
    g = _int_poly_gcd(A, B)
    return Poly(g, QQ).monic()


def _int_content(c: Sequence[int]) -> int:
    g = 0
    for x in c:
        g = _igcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _int_primitive(c: list[int]) -> list[int]:
    g = _int_content(c)
    if g in (0, 1):
        return list(c)
    return [x // g for x in c]


def _int_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        if r[-1] == 0:
            r.pop()
            e -= 1
            continue
        top = r[-1]
        r = [lb * x for x in r]
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] -= top * b[j]
        _int_trim(r)
        e -= 1
    if e > 0:
        m = lb**e
        r = [m * x for x in r]
    return r


def _int_poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive PRS gcd over Z, primitive output."""
    A = _int_primitive(_int_trim(list(a)))
    B = _int_primitive(_int_trim(list(b)))
    if len(A) < len(B):
        A, B = B, A
    while B:
        R = _int_trim(_int_pseudo_rem(A, B))
        A, B = B, _int_primitive(R)
    return A


def squarefree_part(a: Poly) -> Poly:
    """Monic product of the distinct irreducible factors (the radical)."""
    if a.is_zero():
        raise ValueError("zero polynomial has no squarefree part")
    if a.degree == 0:
        return Poly([a.field.one], a.field)
    g = poly_gcd(a, a.derivative())
    if g.degree == 0:
        return a.monic()
    return (a // g).monic()


def yun_decomposition(a: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition in characteristic 0: a = lc * prod f_i^i
    with the f_i monic, squarefree, pairwise coprime. Returns the (f_i, i)
    with deg f_i > 0.
    """
    if a.is_zero():
        raise ValueError("zero polynomial")
    a = a.monic()
    if a.degree == 0:
        return []
    out = []
    g = poly_gcd(a, a.derivative())
    c = a // g
    d = a.derivative() // g - c.derivative()
    i = 1
    while c.degree > 0:
        f = poly_gcd(c, d)
        if f.degree > 0:
            out.append((f.monic(), i))
        c = c // f
        d = d // f - c.derivative()
        i += 1
    return out


def multiplicities(a: Poly) -> list[int]:
    """Root multiplicities of a over the algebraic closure, one entry per
    distinct root, unsorted."""
    out = []
    for f, i in yun_decomposition(a):
        out.extend([i] * f.degree)
    return out


# ---------------------------------------------------------------------------
# resultants and discriminants


def _int_resultant(A: Sequence[int], B: Sequence[int]) -> int:
    """Subresultant PRS resultant over Z (Cohen, Alg. 3.3.7)."""
    A = _int_trim(list(A))
    B = _int_trim(list(B))
    if not A or not B:
        return 0
    if len(A) - 1 == 0:
        return A[0] ** (len(B) - 1)
    if len(B) - 1 == 0:
        return B[0] ** (len(A) - 1)
    s = 1
    if len(A) < len(B):
        if (len(A) - 1) % 2 == 1 and (len(B) - 1) % 2 == 1:
            s = -s
        A, B = B, A
    ca, cb = _int_content(A), _int_content(B)
    A = [x // ca for x in A]
    B = [x // cb for x in B]
    t = ca ** (len(B) - 1) * cb ** (len(A) - 1)
    g = h = 1
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        R = _int_trim(_int_pseudo_rem(A, B))
        A = B
        denom = g * h**delta
        B = [x // denom for x in R]
        g = A[-1]
        if delta == 0:
            pass  # h unchanged
        elif delta == 1:
            h = g
        else:
            h = g**delta // h ** (delta - 1)
        if not B:
            return 0
        if len(B) - 1 == 0:
            da = len(A) - 1
            res = B[0] ** da // h ** (da - 1) if da >= 1 else 1
            return s * t * res


def resultant(a: Poly, b: Poly):
    """res(a, b) with the convention res(a, b) = lc(a)^deg(b) prod b(alpha_i)
    over the roots of a. Zero iff a, b share a root (or one is zero)."""
    if a.field is QQ and b.field is QQ:
        if a.is_zero() or b.is_zero():
            return Fraction(0)
        A, da_mult = clear_denominators(a)
        B, db_mult = clear_denominators(b)
        r = _int_resultant(A, B)
        return Fraction(r, da_mult ** b.degree * db_mult ** a.degree)
    return _euclid_resultant(a.field, a, b)


def _euclid_resultant(f, a: Poly, b: Poly):
    if a.is_zero() or b.is_zero():
        return f.zero
    if b.degree == 0:
        return _field_pow(f, b.lc, a.degree)
    if a.degree == 0:
        return _field_pow(f, a.lc, b.degree)
    sign_flip = (a.degree * b.degree) % 2 == 1
    if a.degree < b.degree:
        r = _euclid_resultant(f, b, a)
        return f.neg(r) if sign_flip else r
    r = a % b
    if r.is_zero():
        return f.zero
    factor = _field_pow(f, b.lc, a.degree - r.degree)
    rest = f.mul(factor, _euclid_resultant(f, b, r))
    return f.neg(rest) if sign_flip else rest


def _field_pow(f, x, e: int):
    acc = f.one
    for _ in range(e):
        acc = f.mul(acc, x)
    return acc


def disc(a: Poly):
    """Discriminant with the sign convention
    disc(a) = (-1)^(n(n-1)/2) res(a, a') / lc(a), so disc(X^2-4) = 16."""
    n = a.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(a, a.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if a.field is QQ:
        return sign * r / a.lc
    f = a.field
    val = f.div(r, a.lc)
    return f.neg(val) if sign < 0 else val


# ---------------------------------------------------------------------------
# integer coefficient helpers


def clear_denominators(a: Poly) -> tuple[list[int], int]:
    """Smallest positive d with d*a integral. Returns (coeffs of d*a, d)."""
    if a.field is not QQ:
        raise ValueError("clear_denominators expects a polynomial over Q")
    d = 1
    for c in a.coeffs:
        d = d * c.denominator // _igcd(d, c.denominator)
    return [int(c * d) for c in a.coeffs], d


def poly_from_int_coeffs(coeffs: Sequence[int]) -> Poly:
    return Poly([Fraction(c) for c in coeffs], QQ)


def primitive_int_poly(a: Poly) -> list[int]:
    """Primitive integer polynomial with the same roots and the sign of lc
    preserved."""
    c, _ = clear_denominators(a)
    c = _int_primitive(c)
    return c


def reduce_mod_p(a: Poly, p: int) -> Poly:
    """Reduction mod p. Raises BadPrime when a denominator or the leading
    coefficient vanishes mod p (degree must be preserved)."""
    gf = GF(p)
    if a.is_zero():
        return Poly((), gf)
    out = []
    for c in a.coeffs:
        if c.denominator % p == 0:
            raise BadPrime(f"coefficient denominator divisible by {p}")
        out.append(gf.coerce(c))
    if out[-1] % p == 0:
        raise BadPrime(f"leading coefficient vanishes mod {p}")
    return Poly(out, gf, normalize=False)


def degree_partition_mod_p(a: Poly, p: int | None = None) -> tuple[int, ...]:
    """Multiset of irreducible factor degrees of a mod p, ascending.
    The input must be squarefree mod p."""
    if isinstance(a.field, PrimeField):
        gf = a.field
        coeffs = [int(c) for c in a.coeffs]
    else:
        if p is None:
            raise ValueError("p required for a polynomial over Q")
        gf = GF(p)
        coeffs = [int(c) for c in reduce_mod_p(a, p).coeffs]
    if len(coeffs) - 1 < 1:
        raise ValueError("degree must be >= 1")
    if not _kernel.is_squarefree(coeffs, gf.p):
        raise ValueError(f"polynomial is not squarefree mod {gf.p}")
    return tuple(_kernel.distinct_degree_partition(coeffs, gf.p))


# ---------------------------------------------------------------------------
# rational roots (complete, factorization-free)


def roots_mod_prime(coeffs: Sequence[int], p: int, seed: int = 1) -> list[int]:
    """All roots in F_p of the integer polynomial, sorted. Deterministic:
    the equal-degree splitting uses a seeded generator."""
    c = [x % p for x in coeffs]
    _int_trim(c)
    if not c:
        raise ValueError("zero polynomial mod p")
    if len(c) == 1:
        return []
    if p == 2:
        return [r for r in (0, 1) if _kernel.eval_mod(c, r, 2) == 0]
    # linear part: gcd(X^p - X, c)
    xp = _kernel.powmod_x(p, c, p)
    lin = _kernel.pgcd(_kernel.psub(xp, [0, 1], p), c, p)
    roots: list[int] = []
    import random

    rng = random.Random(seed)

    def split(f: list[int]) -> None:
        d = len(f) - 1
        if d == 0:
            return
        if d == 1:
            # monic X + a -> root -a
            inv = pow(f[1], -1, p)
            roots.append(-f[0] * inv % p)
            return
        while True:
            s = rng.randrange(p)
            # gcd(f, (X+s)^((p-1)/2) - 1)
            base = [s, 1]
            w = _kernel.ppow_mod(base, (p - 1) // 2, f, p)
            g = _kernel.pgcd(_kernel.psub(w, [1], p), f, p)
            if 0 < len(g) - 1 < d:
                split(g)
                split(_kernel.pdiv(f, g, p))
                return

    split(lin)
    return sorted(roots)


def rational_roots(a: Poly) -> list[Fraction]:
    """All rational roots of a nonzero polynomial over Q, sorted.

    Complete without factoring large integers: any root u/v in lowest terms
    has u | c0 and v | lc of the primitive squarefree part S, so
    max(|u|, |v|) <= B := max(|c0|, |lc|). A prime p coprime to lc(S) with
    S squarefree mod p is chosen; every rational root reduces to a simple
    root mod p, lifts uniquely to mod p^k with p^k > 2 B^2, and is then the
    unique rational reconstruction of its lift. Candidates are verified
    exactly, so spurious residues are discarded and nothing real is missed.
    """
    if a.is_zero():
        raise ValueError("zero polynomial")
    if a.degree == 0:
        return []
    roots: list[Fraction] = []
    coeffs = list(a.coeffs)
    k0 = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        k0 += 1
    if k0:
        roots.append(Fraction(0))
    work = Poly(coeffs, QQ)
    if work.degree == 0:
        return sorted(roots)
    S = primitive_int_poly(squarefree_part(work))
    if len(S) - 1 == 1:
        roots.append(Fraction(-S[0], S[1]))
        return sorted(set(roots))
    bound = max(abs(S[0]), abs(S[-1]))
    p = 1 << 20
    while True:
        p = next_prime(p)
        if S[-1] % p == 0:
            continue
        if _kernel.is_squarefree([x % p for x in S], p):
            break
    target = 2 * bound * bound + 1
    k = 1
    pk = p
    while pk < target:
        pk *= p
        k += 1
    dS = [i * c for i, c in enumerate(S)][1:]
    for r in roots_mod_prime(S, p):
        # Newton lift to mod p^k; the derivative stays a unit
        m = p
        x = r
        while m < pk:
            m = min(m * m, pk)
            fx = _int_eval_mod(S, x, m)
            dfx = _int_eval_mod(dS, x, m)
            x = (x - fx * pow(dfx, -1, m)) % m
        cand = _rational_reconstruct(x, pk, bound, bound)
        if cand is not None and work.eval(cand) == 0:
            roots.append(cand)
    return sorted(set(roots))


def _int_eval_mod(coeffs: Sequence[int], x: int, m: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def _rational_reconstruct(
    a: int, m: int, num_bound: int, den_bound: int
) -> Fraction | None:
    """u/v = a mod m with |u| <= num_bound, 0 < v <= den_bound, or None.
    Unique when 2 * num_bound * den_bound < m."""
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > num_bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 == 0:
        return None
    v = s1
    if v < 0:
        v, r1 = -v, -r1
    if v == 0 or v > den_bound or _igcd(abs(r1), v) != 1:
        return None
    return Fraction(r1, v)


# ---------------------------------------------------------------------------
# interpolation


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> Poly:
    """Newton divided-difference interpolation over Q."""
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coefs = [Fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - j])
    # Horner expansion of the Newton form
    poly = Poly((), QQ)
    for i in range(n - 1, -1, -1):
        node = Poly([-xs[i], Fraction(1)], QQ)
        poly = poly * node + Poly([coefs[i]], QQ)
    return poly


# ---------------------------------------------------------------------------
# rational functions


@dataclass(frozen=True)
class RatFunc:
    """Quotient num/den of coprime polynomials over Q, den monic nonzero."""

    num: Poly
    den: Poly

    @property
    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __repr__(self) -> str:
        return f"RatFunc({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"


def ratfunc_make(num: Poly, den: Poly) -> RatFunc:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    g = poly_gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    lc = den.lc
    if lc != 1:
        den = den.monic()
        num = num.scale(Fraction(1) / lc)
    return RatFunc(num, den)


def ratfunc_from_ints(num: Sequence[int], den: Sequence[int] = (1,)) -> RatFunc:
    return ratfunc_make(poly_from_int_coeffs(num), poly_from_int_coeffs(den))


def ratfunc_eval(f: RatFunc, x):
    """Total evaluation on Q union {INF}, valued in Q union {INF}."""
    if x is INF:
        dn, dd = f.num.degree, f.den.degree
        if dn > dd:
            return INF
        if dn < dd:
            return Fraction(0)
        return f.num.lc / f.den.lc
    x = Fraction(x)
    d = f.den.eval(x)
    if d == 0:
        return INF  # numerator nonzero by coprimality
    return f.num.eval(x) / d


def ratfunc_add(f: RatFunc, g: RatFunc) -> RatFunc:
    return ratfunc_make(f.num * g.den + g.num * f.den, f.den * g.den)


def ratfunc_sub(f: RatFunc, g: RatFunc) -> RatFunc:
    return ratfunc_make(f.num * g.den - g.num * f.den, f.den * g.den)


def ratfunc_mul(f: RatFunc, g: RatFunc) -> RatFunc:
    return ratfunc_make(f.num * g.num, f.den * g.den)


def ratfunc_div(f: RatFunc, g: RatFunc) -> RatFunc:
    if g.num.is_zero():
        raise ZeroDivisionError("division by the zero function")
    return ratfunc_make(f.num * g.den, f.den * g.num)


def ratfunc_compose(f: RatFunc, g: RatFunc) -> RatFunc:
    """f(g(X)); degrees multiply."""
    gn, gd = g.num, g.den
    n = max(f.num.degree, f.den.degree)

    def eval_poly_at(poly: Poly) -> Poly:
        # homogeneous evaluation: sum a_i gn^i gd^(n-i)
        acc = Poly((), QQ)
        power = Poly([Fraction(1)], QQ)
        pows = [power]
        for _ in range(n):
            power = power * gn
            pows.append(power)
        gd_pow = Poly([Fraction(1)], QQ)
        terms = []
        for i in range(n, -1, -1):
            if i <= poly.degree:
                terms.append((i, gd_pow))
            gd_pow = gd_pow * gd
        for i, dpow in terms:
            c = poly.coeffs[i]
            if c != 0:
                acc = acc + (pows[i] * dpow).scale(c)
        return acc

    return ratfunc_make(eval_poly_at(f.num), eval_poly_at(f.den))


def moebius_conjugate(f: RatFunc, lam: RatFunc, mu: RatFunc) -> RatFunc:
    """lam o f o mu for fractional-linear lam, mu."""
    if lam.degree != 1 or mu.degree != 1:
        raise ValueError("conjugating maps must have degree 1")
    return ratfunc_compose(lam, ratfunc_compose(f, mu))


def fiber_poly(f: RatFunc, t0: Fraction) -> Poly:
    """num - t0 * den; its roots are the finite points of the fiber over t0."""
    return f.num - f.den.scale(Fraction(t0))


def fiber_int_poly(f: RatFunc, t0) -> list[int]:
    """Primitive integer polynomial with the finite t0-fiber as its roots."""
    return primitive_int_poly(fiber_poly(f, Fraction(t0)))
