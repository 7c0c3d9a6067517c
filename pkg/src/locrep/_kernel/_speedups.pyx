# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p polynomial kernel. Same contract as the pure module:
dense int coefficient lists, lowest degree first, prime modulus p < 2^31
(the dispatcher in the package __init__ routes larger p to the pure code).
Coefficients are reduced into long long; all products stay below 2^62."""

from libc.stdlib cimport malloc, free

IMPL = "compiled"
MAX_PRIME = 1 << 31


cdef inline long long invmod(long long a, long long p):
    cdef long long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    if newr < 0:
        newr += p
    while newr != 0:
        q = r / newr
        tmp = t - q * newt; t = newt; newt = tmp
        tmp = r - q * newr; r = newr; newr = tmp
    if t < 0:
        t += p
    return t


cdef long long _llpow(long long base, long long e, long long p):
    cdef long long acc = 1
    base %= p
    if base < 0:
        base += p
    while e > 0:
        if e & 1:
            acc = (acc * base) % p
        base = (base * base) % p
        e >>= 1
    return acc


cdef long long* _buf(int n) except NULL:
    cdef long long* b = <long long*>malloc((n if n > 0 else 1) * sizeof(long long))
    if b == NULL:
        raise MemoryError()
    return b


cdef int _from_list(object coeffs, long long p, long long** out) except -1:
    cdef int n = len(coeffs), i
    cdef long long* b = _buf(n)
    for i in range(n):
        b[i] = <long long>(coeffs[i] % p)
    while n > 0 and b[n - 1] == 0:
        n -= 1
    out[0] = b
    return n


cdef object _to_list(long long* a, int n):
    cdef int i
    return [a[i] for i in range(n)]


cdef void _zero(long long* a, int n):
    cdef int i
    for i in range(n):
        a[i] = 0


cdef void _mul_into(long long* a, int na, long long* b, int nb, long long* out, long long p):
    # out has capacity na + nb - 1 and arrives zeroed
    cdef int i, j
    cdef long long x
    for i in range(na):
        x = a[i]
        if x == 0:
            continue
        for j in range(nb):
            out[i + j] = (out[i + j] + x * b[j]) % p


cdef int _rem_inplace(long long* a, int na, long long* b, int nb, long long p):
    # a %= b in place; returns the remainder length; requires nb >= 1
    cdef long long inv = invmod(b[nb - 1], p), c, v
    cdef int i, j, db = nb - 1, n
    for i in range(na - nb, -1, -1):
        c = (a[i + db] * inv) % p
        if c != 0:
            for j in range(nb):
                v = (a[i + j] - c * b[j]) % p
                if v < 0:
                    v += p
                a[i + j] = v
    n = db if db < na else na
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef int _divmod_inplace(long long* a, int na, long long* b, int nb, long long* q, long long p):
    # q receives the quotient (capacity na - nb + 1, arrives zeroed); a
    # becomes the remainder; returns the remainder length
    cdef long long inv = invmod(b[nb - 1], p), c, v
    cdef int i, j, db = nb - 1, n
    for i in range(na - nb, -1, -1):
        c = (a[i + db] * inv) % p
        q[i] = c
        if c != 0:
            for j in range(nb):
                v = (a[i + j] - c * b[j]) % p
                if v < 0:
                    v += p
                a[i + j] = v
    n = db if db < na else na
    while n > 0 and a[n - 1] == 0:
        n -= 1
    return n


cdef int _gcd_into(long long* a, int na, long long* b, int nb, long long p, long long* out):
    # non-destructive monic gcd; out needs capacity max(na, nb, 1)
    cdef long long* wa = _buf(na)
    cdef long long* wb = _buf(nb)
    cdef long long* t
    cdef long long inv
    cdef int i, n, nx = na, ny = nb
    for i in range(na):
        wa[i] = a[i]
    for i in range(nb):
        wb[i] = b[i]
    cdef long long* x = wa
    cdef long long* y = wb
    while ny > 0:
        if nx < ny:
            t = x; x = y; y = t
            n = nx; nx = ny; ny = n
            continue
        nx = _rem_inplace(x, nx, y, ny, p)
        t = x; x = y; y = t
        n = nx; nx = ny; ny = n
    if nx > 0:
        inv = invmod(x[nx - 1], p)
        for i in range(nx):
            out[i] = (x[i] * inv) % p
    free(wa)
    free(wb)
    return nx


cdef int _powmod(long long* base, int nbase, object e, long long* mod, int nmod,
                 long long p, long long* out) except -1:
    # out needs capacity nmod (results live strictly below deg mod);
    # returns the result length
    cdef int cap = 2 * nmod + 2
    if nbase + 1 > cap:
        cap = nbase + 1
    cdef long long* acc = _buf(cap)
    cdef long long* cur = _buf(cap)
    cdef long long* scratch = _buf(cap)
    cdef int nacc = 1, ncur, i, ns
    acc[0] = 1
    for i in range(nbase):
        cur[i] = base[i]
    ncur = _rem_inplace(cur, nbase, mod, nmod, p)
    cdef object ee = e
    try:
        while ee > 0:
            if ee & 1:
                if nacc > 0 and ncur > 0:
                    _zero(scratch, nacc + ncur)
                    _mul_into(acc, nacc, cur, ncur, scratch, p)
                    ns = nacc + ncur - 1
                else:
                    ns = 0
                ns = _rem_inplace(scratch, ns, mod, nmod, p)
                for i in range(ns):
                    acc[i] = scratch[i]
                nacc = ns
            ee >>= 1
            if ee == 0:
                break
            if ncur > 0:
                _zero(scratch, 2 * ncur)
                _mul_into(cur, ncur, cur, ncur, scratch, p)
                ns = 2 * ncur - 1
            else:
                ns = 0
            ns = _rem_inplace(scratch, ns, mod, nmod, p)
            for i in range(ns):
                cur[i] = scratch[i]
            ncur = ns
        for i in range(nacc):
            out[i] = acc[i]
        return nacc
    finally:
        free(acc)
        free(cur)
        free(scratch)


def padd(a, b, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    cdef int n = na if na > nb else nb, i
    cdef long long* out = _buf(n)
    for i in range(n):
        out[i] = 0
    for i in range(na):
        out[i] = wa[i]
    for i in range(nb):
        out[i] = (out[i] + wb[i]) % pp
    while n > 0 and out[n - 1] == 0:
        n -= 1
    res = _to_list(out, n)
    free(wa); free(wb); free(out)
    return res


def psub(a, b, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    cdef int n = na if na > nb else nb, i
    cdef long long* out = _buf(n)
    cdef long long v
    for i in range(n):
        out[i] = 0
    for i in range(na):
        out[i] = wa[i]
    for i in range(nb):
        v = (out[i] - wb[i]) % pp
        if v < 0:
            v += pp
        out[i] = v
    while n > 0 and out[n - 1] == 0:
        n -= 1
    res = _to_list(out, n)
    free(wa); free(wb); free(out)
    return res


def pmul(a, b, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    if na == 0 or nb == 0:
        free(wa); free(wb)
        return []
    cdef int n = na + nb - 1, i
    cdef long long* out = _buf(n)
    for i in range(n):
        out[i] = 0
    _mul_into(wa, na, wb, nb, out, pp)
    while n > 0 and out[n - 1] == 0:
        n -= 1
    res = _to_list(out, n)
    free(wa); free(wb); free(out)
    return res


def pdivmod(a, b, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    if nb == 0:
        free(wa); free(wb)
        raise ZeroDivisionError("polynomial division by zero")
    if na < nb:
        res = ([], _to_list(wa, na))
        free(wa); free(wb)
        return res
    cdef int nq = na - nb + 1, i
    cdef long long* q = _buf(nq)
    for i in range(nq):
        q[i] = 0
    cdef int nr = _divmod_inplace(wa, na, wb, nb, q, pp)
    while nq > 0 and q[nq - 1] == 0:
        nq -= 1
    res = (_to_list(q, nq), _to_list(wa, nr))
    free(wa); free(wb); free(q)
    return res


def prem(a, b, p):
    return pdivmod(a, b, p)[1]


def pdiv(a, b, p):
    return pdivmod(a, b, p)[0]


def pgcd(a, b, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    cdef int cap = na if na > nb else nb
    cdef long long* out = _buf(cap)
    cdef int n = _gcd_into(wa, na, wb, nb, pp, out)
    res = _to_list(out, n)
    free(wa); free(wb); free(out)
    return res


def deriv(a, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef int na = _from_list(a, pp, &wa), i
    if na <= 1:
        free(wa)
        return []
    cdef long long* out = _buf(na - 1)
    for i in range(1, na):
        out[i - 1] = (wa[i] * i) % pp
    cdef int n = na - 1
    while n > 0 and out[n - 1] == 0:
        n -= 1
    res = _to_list(out, n)
    free(wa); free(out)
    return res


def eval_mod(a, x, p):
    cdef long long pp = p, xx = x % p, acc = 0
    cdef long long *wa = NULL
    cdef int na = _from_list(a, pp, &wa), i
    for i in range(na - 1, -1, -1):
        acc = (acc * xx + wa[i]) % pp
    free(wa)
    return acc


def ppow_mod(base, e, mod, p):
    cdef long long pp = p
    cdef long long *wb = NULL
    cdef long long *wm = NULL
    cdef int nb = _from_list(base, pp, &wb)
    cdef int nm = _from_list(mod, pp, &wm)
    if nm == 0:
        free(wb); free(wm)
        raise ZeroDivisionError("zero modulus")
    cdef long long* out = _buf(nm)
    cdef int n = _powmod(wb, nb, e, wm, nm, pp, out)
    res = _to_list(out, n)
    free(wb); free(wm); free(out)
    return res


def powmod_x(e, mod, p):
    return ppow_mod([0, 1], e, mod, p)


def is_squarefree(a, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef int na = _from_list(a, pp, &wa), i
    if na == 0:
        free(wa)
        raise ValueError("zero polynomial mod p")
    if na <= 2:
        free(wa)
        return True
    cdef long long* d = _buf(na - 1)
    for i in range(1, na):
        d[i - 1] = (wa[i] * i) % pp
    cdef int nd = na - 1
    while nd > 0 and d[nd - 1] == 0:
        nd -= 1
    cdef long long* out = _buf(na)
    cdef int n = _gcd_into(wa, na, d, nd, pp, out)
    free(wa); free(d); free(out)
    return n == 1


def has_root(a, p):
    cdef long long pp = p
    cdef long long *wa = NULL
    cdef int na = _from_list(a, pp, &wa)
    if na == 0:
        free(wa)
        raise ValueError("zero polynomial mod p")
    cdef int d = na - 1, i, r
    cdef long long acc, v
    if d == 0:
        free(wa)
        return False
    if d == 1:
        free(wa)
        return True
    if pp <= d:
        for r in range(pp):
            acc = 0
            for i in range(na - 1, -1, -1):
                acc = (acc * r + wa[i]) % pp
            if acc == 0:
                free(wa)
                return True
        free(wa)
        return False
    # gcd(X^p - X, a) has positive degree iff a has a root in F_p
    cdef long long xbase[2]
    xbase[0] = 0
    xbase[1] = 1
    cdef long long* xp = _buf(na)
    cdef int nxp = _powmod(xbase, 2, p, wa, na, pp, xp)
    if nxp < 2:
        for i in range(nxp, 2):
            xp[i] = 0
        nxp = 2
    v = (xp[1] - 1) % pp
    if v < 0:
        v += pp
    xp[1] = v
    while nxp > 0 and xp[nxp - 1] == 0:
        nxp -= 1
    cdef long long* g = _buf(na)
    cdef int ng = _gcd_into(xp, nxp, wa, na, pp, g)
    free(wa); free(xp); free(g)
    return ng > 1


def distinct_degree_partition(a, p):
    cdef long long pp = p
    # plain Python list work below: avoid negative indexing, the file-level
    # wraparound directive is off
    f = [c % p for c in a]
    while f and f[len(f) - 1] == 0:
        f.pop()
    if not f:
        raise ValueError("zero polynomial mod p")
    if len(f) == 1:
        return ()
    if not is_squarefree(f, p):
        raise ValueError(f"not squarefree mod {p}")
    inv = invmod(f[len(f) - 1], pp)
    f = [(c * inv) % pp for c in f]
    out = []
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


def resultant_mod(a, b, p):
    cdef long long pp = p, res = 1
    cdef long long *wa = NULL
    cdef long long *wb = NULL
    cdef int na = _from_list(a, pp, &wa)
    cdef int nb = _from_list(b, pp, &wb)
    cdef long long* t
    cdef int n, da, db, nr
    if na == 0 or nb == 0:
        free(wa); free(wb)
        return 0
    while True:
        da = na - 1
        db = nb - 1
        if db == 0:
            res = (res * _llpow(wb[0], da, pp)) % pp
            free(wa); free(wb)
            return res
        if da == 0:
            res = (res * _llpow(wa[0], db, pp)) % pp
            free(wa); free(wb)
            return res
        if da < db:
            if (da & 1) and (db & 1):
                res = (pp - res) % pp
            t = wa; wa = wb; wb = t
            n = na; na = nb; nb = n
            continue
        nr = _rem_inplace(wa, na, wb, nb, pp)
        if nr == 0:
            free(wa); free(wb)
            return 0
        if (da & 1) and (db & 1):
            res = (pp - res) % pp
        res = (res * _llpow(wb[nb - 1], da - (nr - 1), pp)) % pp
        t = wa; wa = wb; wb = t
        na = nb
        nb = nr
