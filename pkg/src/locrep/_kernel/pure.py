"""Pure-Python mod-p polynomial kernel.

All functions take dense coefficient lists of ints, lowest degree first,
and a prime p. Lists are normalized (reduced mod p, trailing zeros
stripped) on entry by the cheap helpers below, so callers may pass raw
integer coefficients. The compiled sibling mirrors this module exactly.
"""

from __future__ import annotations

IMPL = "pure"


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def norm(coeffs, p: int) -> list[int]:
    return trim([c % p for c in coeffs])


def padd(a, b, p: int) -> list[int]:
    a, b = norm(a, p), norm(b, p)
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return trim(out)


def psub(a, b, p: int) -> list[int]:
    a, b = norm(a, p), norm(b, p)
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return trim(out)


def pmul(a, b, p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def pdivmod(a, b, p: int) -> tuple[list[int], list[int]]:
    a, b = norm(a, p), norm(b, p)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv % p
        if c == 0:
            continue
        q[i] = c
        for j in range(db + 1):
            a[i + j] = (a[i + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def prem(a, b, p: int) -> list[int]:
    return pdivmod(a, b, p)[1]


def pdiv(a, b, p: int) -> list[int]:
    return pdivmod(a, b, p)[0]


def pgcd(a, b, p: int) -> list[int]:
    """Monic gcd; gcd(0, 0) = []."""
    a, b = norm(a, p), norm(b, p)
    while b:
        a, b = b, prem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def deriv(a, p: int) -> list[int]:
    return trim([i * c % p for i, c in enumerate(a)][1:])


def eval_mod(a, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def ppow_mod(base, e: int, mod, p: int) -> list[int]:
    """base^e mod (mod, p) by square and multiply."""
    result = [1]
    base = prem(norm(base, p), mod, p)
    while e > 0:
        if e & 1:
            result = prem(pmul(result, base, p), mod, p)
        base = prem(pmul(base, base, p), mod, p)
        e >>= 1
    return result


def powmod_x(e: int, mod, p: int) -> list[int]:
    """X^e mod (mod, p)."""
    return ppow_mod([0, 1], e, mod, p)


def is_squarefree(coeffs, p: int) -> bool:
    a = norm(coeffs, p)
    if not a:
        raise ValueError("zero polynomial mod p")
    if len(a) - 1 < 1:
        return True
    return len(pgcd(a, deriv(a, p), p)) == 1


def has_root(coeffs, p: int) -> bool:
    """True iff the polynomial has a root in F_p. Degree must survive the
    reduction (caller's responsibility); the zero polynomial is an error."""
    a = norm(coeffs, p)
    if not a:
        raise ValueError("zero polynomial mod p")
    d = len(a) - 1
    if d == 0:
        return False
    if d == 1:
        return True
    if p <= d:
        return any(eval_mod(a, r, p) == 0 for r in range(p))
    xp = powmod_x(p, a, p)
    g = pgcd(psub(xp, [0, 1], p), a, p)
    return len(g) > 1


def distinct_degree_partition(coeffs, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors (with multiplicity one each),
    ascending. Input must be squarefree mod p."""
    f = norm(coeffs, p)
    if not f:
        raise ValueError("zero polynomial mod p")
    inv = pow(f[-1], -1, p)
    f = [c * inv % p for c in f]
    if len(f) - 1 < 1:
        return ()
    if len(pgcd(f, deriv(f, p), p)) != 1:
        raise ValueError(f"not squarefree mod {p}")
    out: list[int] = []
    h = [0, 1]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            out.append(len(f) - 1)
            break
        h = ppow_mod(h, p, f, p)
        g = pgcd(psub(h, [0, 1], p), f, p)
        if len(g) > 1:
            out.extend([d] * ((len(g) - 1) // d))
            f = pdiv(f, g, p)
            h = prem(h, f, p)
    return tuple(sorted(out))


def resultant_mod(a, b, p: int) -> int:
    """res(a, b) mod p by the Euclidean identity."""
    a, b = norm(a, p), norm(b, p)
    if not a or not b:
        return 0
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, p) % p
        if da == 0:
            return res * pow(a[0], db, p) % p
        if da < db:
            if da % 2 == 1 and db % 2 == 1:
                res = -res % p
            a, b = b, a
            continue
        r = prem(a, b, p)
        if not r:
            return 0
        if da % 2 == 1 and db % 2 == 1:
            res = -res % p
        res = res * pow(b[-1], da - (len(r) - 1), p) % p
        a, b = b, r
