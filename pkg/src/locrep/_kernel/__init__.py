"""Mod-p polynomial kernel with a compiled fast path.

The compiled extension (Cython) is used when it built successfully and the
modulus fits in a machine word; setting LOCREP_PURE=1 in the environment
forces the pure-Python implementation. Either way the exported functions
take and return plain int lists, lowest degree first.
"""

from __future__ import annotations

import os

from . import pure

trim = pure.trim
norm = pure.norm

_compiled = None
if os.environ.get("LOCREP_PURE") != "1":
    try:
        from . import _speedups as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None

if _compiled is not None:
    IMPL = "compiled"
    _MAX = _compiled.MAX_PRIME

    def _pick(p: int, fast, slow):
        return fast if p < _MAX else slow

    def padd(a, b, p):
        return _pick(p, _compiled.padd, pure.padd)(a, b, p)

    def psub(a, b, p):
        return _pick(p, _compiled.psub, pure.psub)(a, b, p)

    def pmul(a, b, p):
        return _pick(p, _compiled.pmul, pure.pmul)(a, b, p)

    def pdivmod(a, b, p):
        return _pick(p, _compiled.pdivmod, pure.pdivmod)(a, b, p)

    def prem(a, b, p):
        return _pick(p, _compiled.prem, pure.prem)(a, b, p)

    def pdiv(a, b, p):
        return _pick(p, _compiled.pdiv, pure.pdiv)(a, b, p)

    def pgcd(a, b, p):
        return _pick(p, _compiled.pgcd, pure.pgcd)(a, b, p)

    def deriv(a, p):
        return _pick(p, _compiled.deriv, pure.deriv)(a, p)

    def eval_mod(a, x, p):
        return _pick(p, _compiled.eval_mod, pure.eval_mod)(a, x, p)

    def ppow_mod(base, e, mod, p):
        return _pick(p, _compiled.ppow_mod, pure.ppow_mod)(base, e, mod, p)

    def powmod_x(e, mod, p):
        return _pick(p, _compiled.powmod_x, pure.powmod_x)(e, mod, p)

    def has_root(a, p):
        return _pick(p, _compiled.has_root, pure.has_root)(a, p)

    def is_squarefree(a, p):
        return _pick(p, _compiled.is_squarefree, pure.is_squarefree)(a, p)

    def distinct_degree_partition(a, p):
        return _pick(p, _compiled.distinct_degree_partition,
                     pure.distinct_degree_partition)(a, p)

    def resultant_mod(a, b, p):
        return _pick(p, _compiled.resultant_mod, pure.resultant_mod)(a, b, p)

else:
    IMPL = "pure"
    padd = pure.padd
    psub = pure.psub
    pmul = pure.pmul
    pdivmod = pure.pdivmod
    prem = pure.prem
    pdiv = pure.pdiv
    pgcd = pure.pgcd
    deriv = pure.deriv
    eval_mod = pure.eval_mod
    ppow_mod = pure.ppow_mod
    powmod_x = pure.powmod_x
    has_root = pure.has_root
    is_squarefree = pure.is_squarefree
    distinct_degree_partition = pure.distinct_degree_partition
    resultant_mod = pure.resultant_mod

__all__ = [
    "IMPL", "trim", "norm", "padd", "psub", "pmul", "pdivmod", "prem",
    "pdiv", "pgcd", "deriv", "eval_mod", "ppow_mod", "powmod_x",
    "has_root", "is_squarefree", "distinct_degree_partition",
    "resultant_mod",
]
