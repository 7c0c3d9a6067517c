"""Exact decision procedure for p-adic solvability and p-adic values.

Roots in Z_p are decided by a depth-first digit descent: enumerate residues
r mod p killing F, certify via Hensel when the derivative stays a unit,
otherwise substitute X = r + pY, strip the common power of p, and recurse.
The recursion depth is capped by v_p(disc) + 1, which suffices: two distinct
roots of the squarefree part cannot share more initial digits than the
discriminant valuation allows, so a surviving path below the cap always
isolates a simple root.  Everything is integer arithmetic; no floating or
truncated p-adics anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    INF,
    BadPrime,
    Poly,
    RatFunc,
    _int_resultant,
    clear_denominators,
    primitive_int_poly,
    ratfunc_eval,
    squarefree_part,
)
from .primes import is_prime


def _vp(n: int, p: int) -> int:
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _int_eval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _int_deriv(coeffs: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _taylor_shift_scale(coeffs: list[int], r: int, p: int) -> list[int]:
    """Coefficients of G(r + p*Y) from those of G."""
    out = list(coeffs)
    n = len(out)
    # repeated synthetic division computes the Taylor expansion at r
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] += r * out[j + 1]
    pk = 1
    for i in range(n):
        out[i] *= pk
        pk *= p
    return out


@dataclass(frozen=True)
class PadicDecision:
    """Outcome of a Z_p / Q_p root search.

    A witness (r, k, v) certifies v_p(F(r)) >= k and k > 2v with
    v = v_p(F'(r)), the classical lifting condition, where F is the
    primitive squarefree model actually descended on (the reversed
    polynomial when model == "reversal").  exhausted_depth is the deepest
    descent level visited; on a negative answer it equals the budget at
    which every path was cut or died.
    """

    solvable: bool
    witness: tuple[int, int, int] | None
    exhausted_depth: int
    model: str = "direct"


def _certified_residue(
    S: list[int], digits: list[int], stripped: int, p: int
) -> tuple[int, int, int]:
    """Lift the digit string to a residue meeting the Hensel inequality.

    At the firing level l the accumulated substitutions give
    S(c + p^l * y) = p^M * G(y) with G'(r_l) a unit, so v_p(S'(r*)) = M - l
    exactly.  Each further level is a forced single digit (G stays linear
    mod p) and raises v_p(S(r*)) by at least one while the derivative
    valuation stays put, so the loop below reaches k = 2*(M - l) + 1.
    """
    level = len(digits) - 1
    vstar = stripped - level
    k = 2 * vstar + 1
    rstar = 0
    for i, d in enumerate(digits):
        rstar += d * p**i
    G = list(S)
    for d in digits[:-1]:
        G = _taylor_shift_scale(G, d, p)
        m = min(_vp(c, p) for c in G if c)
        G = [c // p**m for c in G]
    r = digits[-1]
    depth = level
    while True:
        val = _int_eval(S, rstar)
        if val == 0 or _vp(val, p) >= k:
            break
        G = _taylor_shift_scale(G, r, p)
        G = [c // p for c in G]
        c0, c1 = G[0] % p, G[1] % p
        r = (-c0 * pow(c1, -1, p)) % p
        depth += 1
        rstar += r * p**depth
    rstar %= p**k
    return rstar, k, vstar


def zp_root_exists(F: Poly, p: int) -> PadicDecision:
    """Decide whether F has a root in the p-adic integers.

    F must have p-integral coefficients.  The answer is exact; a positive
    answer carries a Hensel certificate for the primitive squarefree model.
    """
    if F.is_zero():
        raise ValueError("zero polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    for c in F.coeffs:
        if c.denominator % p == 0:
            raise BadPrime(f"coefficients are not {p}-integral")
    if F.degree < 1:
        return PadicDecision(False, None, 0)
    S = primitive_int_poly(squarefree_part(F))
    if len(S) == 2:
        return _decide_linear(S, p)
    disc = _int_resultant(S, _int_deriv(S))  # nonzero: S is squarefree
    budget = _vp(disc, p) + 1 if disc % p == 0 else 1

    stack: list[tuple[list[int], list[int], int]] = [(S, [], 0)]
    while stack:
        G, digits, stripped = stack.pop()
        level = len(digits)
        if level >= budget:
            continue
        for r in range(p):
            if _int_eval(G, r) % p:
                continue
            dG = _int_deriv(G)
            if _int_eval(dG, r) % p:
                witness = _certified_residue(S, digits + [r], stripped, p)
                return PadicDecision(True, witness, level)
            nxt = _taylor_shift_scale(G, r, p)
            m = min(_vp(c, p) for c in nxt if c)
            stack.append(([c // p**m for c in nxt], digits + [r], stripped + m))
    return PadicDecision(False, None, budget)


def _decide_linear(S: list[int], p: int) -> PadicDecision:
    """Z_p membership for the root of bX - a; certificate mod p^(2v+1)."""
    b, a = S[1], -S[0]
    vb = _vp(b, p)
    if a != 0 and _vp(a, p) < vb:
        return PadicDecision(False, None, 1)
    k = 2 * vb + 1
    mod = p**k
    x = 0 if a == 0 else (a // p**vb) * pow(b // p**vb, -1, mod) % mod
    return PadicDecision(True, (x, k, vb), 0)


def qp_root_exists(F: Poly, p: int) -> PadicDecision:
    """Decide whether F has a root in the field Q_p.

    Negative-valuation roots of F are positive-valuation roots of the
    reversal X^deg * F(1/X), so two Z_p descents cover Q_p."""
    if F.is_zero():
        raise ValueError("zero polynomial")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if F.degree < 1:
        return PadicDecision(False, None, 0)
    ints, _ = clear_denominators(F)
    direct = zp_root_exists(Poly([Fraction(c) for c in ints], F.field), p)
    if direct.solvable:
        return direct
    rev = list(reversed(ints))
    revdec = zp_root_exists(Poly([Fraction(c) for c in rev], F.field), p)
    if revdec.solvable:
        return PadicDecision(True, revdec.witness, revdec.exhausted_depth, "reversal")
    return PadicDecision(
        False, None, max(direct.exhausted_depth, revdec.exhausted_depth)
    )


def is_kp_value(f: RatFunc, t0, p: int) -> bool:
    """True iff t0 is a value of f on P^1(Q_p), i.e. f(beta) = t0 for some
    beta in Q_p or beta = infinity.

    The infinity preimage is settled by exact rational evaluation; finite
    preimages reduce to Q_p-solvability of num - t0*den (degree drop at
    t0 = f(infinity) is exactly the case the first check covers)."""
    if t0 is INF:
        if f.num.degree > f.den.degree:
            return True
        if f.den.degree < 1:
            return False
        return qp_root_exists(f.den, p).solvable
    t0 = Fraction(t0)
    if ratfunc_eval(f, INF) == t0:
        return True
    fiber = f.num - f.den.scale(t0)
    if fiber.degree < 1:
        return False
    return qp_root_exists(fiber, p).solvable


@dataclass(frozen=True)
class BadPrimeSet:
    """Finite prime set given by integer contributions with reasons.

    Membership is an exact divisibility test; enumeration factors the
    contributions by trial division and reports completeness, since a
    discriminant may hide prime factors beyond any fixed bound."""

    contributions: tuple[tuple[int, str], ...]

    def contains(self, p: int) -> bool:
        return any(n % p == 0 for n, _ in self.contributions)

    def reasons_for(self, p: int) -> tuple[str, ...]:
        seen = []
        for n, reason in self.contributions:
            if n % p == 0 and reason not in seen:
                seen.append(reason)
        return tuple(seen)

    def upto(self, bound: int) -> list[int]:
        from .primes import primes_up_to

        return [p for p in primes_up_to(bound) if self.contains(p)]

    def try_enumerate(self, bound: int = 10**6) -> tuple[tuple[int, ...], bool]:
        """(primes, complete); incomplete when a cofactor resists trial
        division up to the bound."""
        from .primes import factor_trial

        out: set[int] = set()
        complete = True
        for n, _ in self.contributions:
            factors, cofactor = factor_trial(abs(n), bound)
            out.update(factors)
            if cofactor != 1:
                complete = False
        return tuple(sorted(out)), complete


def bad_primes(fs, t0) -> BadPrimeSet:
    """Primes where the Hensel good-reduction argument can fail for some
    f in fs at the value t0: divisors of coefficient denominators, of the
    leading coefficient of the primitive fiber, or of the discriminant of
    its squarefree part.  Away from these, t0 is a Q_p-value of f iff the
    fiber has a root mod p or infinity is a preimage."""
    t0 = Fraction(t0)
    contributions: list[tuple[int, str]] = []

    def add(n: int, reason: str) -> None:
        n = abs(n)
        if n > 1 and (n, reason) not in contributions:
            contributions.append((n, reason))

    add(t0.denominator, "denominator")
    for f in fs:
        for c in list(f.num.coeffs) + list(f.den.coeffs):
            add(c.denominator, "denominator")
        fiber = f.num - f.den.scale(t0)
        if fiber.is_zero():
            raise ValueError("t0 equals a constant function in the set")
        ints = primitive_int_poly(fiber)
        add(ints[-1], "leading")
        if len(ints) > 2:
            S = primitive_int_poly(squarefree_part(Poly([Fraction(c) for c in ints])))
            if len(S) > 2:
                add(_int_resultant(S, _int_deriv(S)), "discriminant")
    return BadPrimeSet(tuple(contributions))
