"""Named example sets with frozen expectations and per-entry check plans.

Every entry bundles a tuple of rational functions, the data the
construction is supposed to realize (degrees, branch partitions,
discriminant square classes, a permutation-group model whenever one is
enumerable at desk scale), and the list of check identifiers that consume
that data. entry_verify(name) runs the checks and returns one result dict
per identifier, so a single call certifies an entry end to end: build,
ramification, prime scans, minimality witnesses, group certificate.

Entry names take parameters in call syntax, "chebyshev-monomial(5)" or
"many-redei(7,2)"; a bare name uses the documented defaults. The two
large transcribed fixtures (m11-pair, pgl28-pair) live in
data/catalog.json in factored form and are guarded by checksum checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import comb
from typing import Callable

from .exact import (
    INF,
    Poly,
    QQ,
    RatFunc,
    _fraction_is_square,
    poly_from_ints,
    ratfunc_from_ints,
    ratfunc_make,
)
from .permgroup import (
    MarkedAction,
    _fp2_tables,
    agammal1,
    agl1,
    agl1_fp2,
    alternating_group,
    branch_cycle_constraint,
    combine_actions,
    compose,
    coset_action,
    coset_fpf_check,
    direct_product_action,
    empty_action,
    fibered_product,
    fp2_translations,
    generate,
    group_from_elements,
    identity,
    is_transitive,
    m11_degree12_action,
    m11_generators,
    m11_group,
    natural_action,
    perm_from_cycles,
    perm_sign,
    sign_character_action,
    symmetric_group,
)
from .primes import is_prime, primes_up_to
from .ramification import (
    GENERIC_ALGEBRAIC,
    disc_square_class,
    quadratic_companion,
    quadratic_resolvent,
    square_class_equal,
)
from .verify import (
    _cached_critical_values,
    certify_with_group,
    check_locally_representing,
    check_minimality,
    default_t0_samples,
    group_consistency,
    model_cycle_tuples,
    sample_cycle_types,
)

__all__ = [
    "CatalogEntry",
    "chebyshev",
    "entry",
    "entry_names",
    "entry_verify",
    "redei",
]

# Branch data is queried by several checks per entry and again by the t0
# sampler; share the sampler's cache so each exact discriminant runs once.
_branch = _cached_critical_values


# ---------------------------------------------------------------------------
# function builders


def chebyshev(n: int) -> Poly:
    """Degree-n Chebyshev polynomial, T_n(cos u) = cos(n u).

    Three-term recurrence T_{n+1} = 2X T_n - T_{n-1} from T_0 = 1,
    T_1 = X. As a map of the line, T_n has dihedral monodromy with
    partition data (n; 2,...,2[,1]) over infinity and +-1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    prev = Poly([Fraction(1)], QQ)
    if n == 0:
        return prev
    cur = Poly([Fraction(0), Fraction(1)], QQ)
    two_x = Poly([Fraction(0), Fraction(2)], QQ)
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


def redei(n: int, a) -> RatFunc:
    """Degree-n Redei function with nonsquare parameter a.

    Write (X + s)^n = N(X) + s D(X) with s^2 = a; the function is N/D.
    It is the twist of X^n by the quadratic field of a: totally ramified
    over the two conjugate points t = +-sqrt(a) and nowhere else, and
    linearly related to X^n once s is adjoined. Compositions multiply
    degrees exactly as monomials do: redei(m, a) o redei(n, a) equals
    redei(m*n, a).
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("degree must be odd and positive")
    a = Fraction(a)
    if a == 0 or _fraction_is_square(a):
        raise ValueError("parameter must be a nonsquare rational")
    num = [Fraction(0)] * (n + 1)
    den = [Fraction(0)] * n
    for k in range(n + 1):
        c = comb(n, k) * a ** (k // 2)
        if k % 2 == 0:
            num[n - k] = c
        else:
            den[n - k] = c
    return ratfunc_make(Poly(num, QQ), Poly(den, QQ))


def _ppow(base: Poly, k: int) -> Poly:
    out = Poly([Fraction(1)], QQ)
    for _ in range(k):
        out = out * base
    return out


def _as_ratfunc(p: Poly) -> RatFunc:
    return ratfunc_make(p, Poly([Fraction(1)], QQ))


# ---------------------------------------------------------------------------
# stored fixtures

_DATA: dict | None = None


def _data() -> dict:
    global _DATA
    if _DATA is None:
        text = resources.files("locrep.data").joinpath("catalog.json").read_text()
        _DATA = json.loads(text)
    return _DATA


def _poly_from_factored(spec: dict) -> Poly:
    out = poly_from_ints([spec.get("constant", 1)])
    for coeffs, power in spec["factors"]:
        out = out * _ppow(poly_from_ints(coeffs), int(power))
    return out


def _stored_functions(name: str) -> tuple[RatFunc, ...]:
    return tuple(
        ratfunc_make(
            _poly_from_factored(spec["numerator"]),
            _poly_from_factored(spec["denominator"]),
        )
        for spec in _data()[name]["functions"]
    )


# ---------------------------------------------------------------------------
# group models


def _intro_model() -> MarkedAction:
    # Klein four group; each quadratic member contributes one sign
    # character, kernels the three proper subgroups, so the three blocks
    # cover the group and no two of them do.
    s = perm_from_cycles(4, [(0, 1)])
    t = perm_from_cycles(4, [(2, 3)])
    G = generate([s, t])
    act = empty_action(G)
    for label, gen in (("f1", s), ("f2", t), ("f3", compose(s, t))):
        act = sign_character_action(act, generate([gen]), label)
    return act


def _quartic_model() -> MarkedAction:
    G = symmetric_group(4)
    d4 = generate([perm_from_cycles(4, [(0, 1, 2, 3)]), perm_from_cycles(4, [(0, 2)])])
    return combine_actions([natural_action(G, "quartic"), coset_action(G, d4, "resolvent")])


def _icosahedral_pair_model() -> MarkedAction:
    G = symmetric_group(5)
    s3s2 = generate(
        [
            perm_from_cycles(5, [(0, 1)]),
            perm_from_cycles(5, [(1, 2)]),
            perm_from_cycles(5, [(3, 4)]),
        ]
    )
    return combine_actions(
        [coset_action(G, agl1(5), "deg6"), coset_action(G, s3s2, "deg10")]
    )


def _icosahedral_triple_model() -> MarkedAction:
    # Splitting fields share exactly the constant quadratic of conductor 5:
    # couple the symmetric group to the affine group of the fifth roots by
    # sign against the multiplier's square class.
    G = symmetric_group(5)
    base = combine_actions([coset_action(G, agl1(5), "deg6"), natural_action(G, "deg5")])
    src_of = {img: g for g, img in base.pairs()}
    id2, sw2 = (0, 1), (1, 0)
    q1 = {
        img: (id2 if perm_sign(src_of[img]) == 1 else sw2)
        for img in base.group.elements
    }
    aff = agl1(5)
    q2 = {h: (id2 if (h[1] - h[0]) % 5 in (1, 4) else sw2) for h in aff.elements}
    F = fibered_product(base.group, aff, q1, q2)
    blocks = (("deg6", 0, 6), ("deg5", 6, 5), ("x5", 11, 5))
    return MarkedAction(F, blocks, F, F.elements)


def _s6_model() -> MarkedAction:
    # The second block is the exotic degree-6 action: cosets of a
    # PGL_2(5) subgroup, generated by x+1, 2x and 1/x on the projective
    # line over F_5 with the point 5 playing infinity.
    G = symmetric_group(6)
    exotic = generate(
        [
            perm_from_cycles(6, [(0, 1, 2, 3, 4)]),
            perm_from_cycles(6, [(1, 2, 4, 3)]),
            perm_from_cycles(6, [(0, 5), (2, 3)]),
        ]
    )
    base = combine_actions([natural_action(G, "sextic"), coset_action(G, exotic, "exotic")])
    return sign_character_action(base, alternating_group(6), "quadratic")


def _m11_model() -> MarkedAction | None:
    G = m11_group()
    deg12 = m11_degree12_action(G, "deg12")
    if deg12 is None:
        return None
    return combine_actions([natural_action(G, "deg11"), deg12])


def _primitive_root(p: int) -> int:
    for g in range(2, p):
        order, v = 1, g
        while v != 1:
            v = v * g % p
            order += 1
        if order == p - 1:
            return g
    raise ValueError(f"{p} has no primitive root")


def _mult(e, offset: int, p: int) -> int:
    # multiplier of the affine block starting at offset; the shift cancels
    # in the difference mod p
    return (e[offset + 1] - e[offset]) % p


def _chebyshev_monomial_model(p: int) -> MarkedAction:
    """Pairs of affine maps whose multipliers agree up to sign, plus the
    sign block that is trivial exactly when they agree on the nose."""
    Gp = agl1(p)
    m = (p - 1) // 2
    r = _primitive_root(p)
    dlog = {}
    v = 1
    for k in range(p - 1):
        dlog[v] = k
        v = v * r % p

    def rot(k: int):
        return tuple((i + k) % m for i in range(m))

    q = {g: rot(dlog[_mult(g, 0, p)] % m) for g in Gp.elements}
    F = fibered_product(Gp, Gp, q, q)
    act = MarkedAction(F, (("monomial", 0, p), ("chebyshev", p, p)), F, F.elements)
    U = group_from_elements(
        [e for e in F.elements if _mult(e, 0, p) == _mult(e, p, p)], degree=2 * p
    )
    return sign_character_action(act, U, "companion")


def _many_redei_model(p: int, ds: tuple[int, ...]) -> MarkedAction:
    """Full product of affine groups, one per degree-p member, with the
    product of the multiplier square classes as the sign block.

    The true monodromy may be a proper subgroup of the product (the
    members can share constants), but a covering of the product restricts
    to a covering of any subgroup meeting every sign pattern, so the
    certificate is still sufficient.
    """
    Gp = agl1(p)
    labels = ["chebyshev"] + [f"redei{d}" for d in ds]
    prod = direct_product_action([natural_action(Gp, lab) for lab in labels])
    half = (p - 1) // 2
    n = len(labels)

    def chi(e) -> int:
        s = 1
        for i in range(n):
            if pow(_mult(e, i * p, p), half, p) != 1:
                s = -s
        return s

    U = group_from_elements(
        [e for e in prod.group.elements if chi(e) == 1], degree=n * p
    )
    return sign_character_action(prod, U, "companion")


def _semilinear_model(p: int) -> MarkedAction:
    """Semilinear affine group on p^2 points, coupled to two auxiliary
    affine blocks of degree 3, with the twisted sign block on top.

    The coupling fixes chi_alpha (linear versus semilinear) against the
    first cubic's multiplier class; the sign block is the product of
    chi_beta (square class of the linear part's multiplier) with the
    second cubic's class. Translations land in the kernel of both
    characters, and every other element of the affine block has exactly
    one fixed point, which is the whole covering argument.
    """
    q, mul, frob = _fp2_tables(p)
    A = agammal1(p)
    nset = frozenset(agl1_fp2(p).elements)
    half = (q - 1) // 2

    def field_legendre(a: int) -> int:
        # square-and-multiply in the field table; index 1 is the unit
        acc, base, e = 1, a, half
        while e:
            if e & 1:
                acc = mul(acc, base)
            base = mul(base, base)
            e >>= 1
        return 1 if acc == 1 else -1

    def idx_sub(i: int, j: int) -> int:
        return (i % p - j % p) % p + p * ((i // p - j // p) % p)

    def chi_beta(s) -> int:
        lin = s if s in nset else compose(s, frob)
        return field_legendre(idx_sub(lin[1], lin[0]))

    G3 = agl1(3)
    ph = direct_product_action([natural_action(G3, "c1"), natural_action(G3, "c2")])
    id2, sw2 = (0, 1), (1, 0)
    q1 = {g: (id2 if g in nset else sw2) for g in A.elements}
    q2 = {h: (id2 if _mult(h, 0, 3) == 1 else sw2) for h in ph.group.elements}
    F = fibered_product(A, ph.group, q1, q2)
    act = MarkedAction(F, (("fq", 0, q), ("c1", q, 3), ("c2", q + 3, 3)), F, F.elements)

    def psi(e) -> int:
        return chi_beta(e[:q]) * (1 if _mult(e, q + 3, 3) == 1 else -1)

    U = group_from_elements([e for e in F.elements if psi(e) == 1], degree=F.degree)
    return sign_character_action(act, U, "twist")


# ---------------------------------------------------------------------------
# entries


@dataclass(frozen=True)
class CatalogEntry:
    """One named example set plus everything needed to verify it.

    branch holds one expected partition dict per function (None skips the
    comparison); resolvent rows are (index, coefficients, mode) with mode
    "radical" for the normalized squarefree branch polynomial and "class"
    for the sign-true discriminant square class; resolvent_pairs asserts
    two members share one class. Every datum stored here is consumed by
    at least one check identifier in checks.
    """

    name: str
    functions: tuple[RatFunc, ...]
    degrees: tuple[int, ...]
    minimal: bool | None
    checks: tuple[str, ...]
    model: Callable[[], MarkedAction | None] | None = None
    branch: tuple[dict | None, ...] = ()
    resolvent: tuple[tuple[int, tuple, str], ...] = ()
    resolvent_pairs: tuple[tuple[int, int], ...] = ()
    scan_bound: int = 500
    scan_samples: int = 20
    drop_bound: int = 2000
    drop_samples: int = 40
    params: tuple = ()
    note: str = ""


def _intro_entry() -> CatalogEntry:
    f1 = ratfunc_from_ints([0, 0, 1])
    f2 = ratfunc_from_ints([1, 0, 1])
    f3 = ratfunc_from_ints([1], [1, 0, -1])
    return CatalogEntry(
        name="intro-triple",
        functions=(f1, f2, f3),
        degrees=(2, 2, 2),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "resolvent",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_intro_model,
        branch=(
            {Fraction(0): (2,), INF: (2,)},
            {Fraction(1): (2,), INF: (2,)},
            {Fraction(0): (2,), Fraction(1): (2,)},
        ),
        resolvent=(
            (0, (0, 1), "class"),
            (1, (-1, 1), "class"),
            (2, (0, -1, 1), "class"),
        ),
        scan_bound=1000,
        scan_samples=25,
        note="Three quadratics whose discriminant classes t, t-1, t(t-1) "
        "multiply to a square: the smallest locally representing set.",
    )


def _icosahedral_functions() -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    x = poly_from_ints([0, 1])
    f1 = ratfunc_make(_ppow(poly_from_ints([5, 10, 1]), 3), x)
    f2 = _as_ratfunc(_ppow(x, 3) * poly_from_ints([40, 5, 1]))
    f3 = ratfunc_make(
        _ppow(poly_from_ints([0, 5]), 3) * _ppow(poly_from_ints([20, 25, 8]), 3),
        _ppow(poly_from_ints([5, 5, 1]), 5),
    )
    x5 = ratfunc_from_ints([0, 0, 0, 0, 0, 1])
    return f1, f2, f3, x5

_ICOSA_BRANCH = {
    "f1": {Fraction(0): (3, 3), Fraction(1728): (2, 2, 1, 1), INF: (5, 1)},
    "f2": {Fraction(0): (3, 1, 1), Fraction(1728): (2, 2, 1), INF: (5,)},
    "f3": {
        Fraction(0): (3, 3, 3, 1),
        Fraction(1728): (2, 2, 2, 2, 1, 1),
        INF: (5, 5),
    },
    "x5": {Fraction(0): (5,), INF: (5,)},
}


def _icosahedral_pair_entry() -> CatalogEntry:
    f1, _, f3, _ = _icosahedral_functions()
    return CatalogEntry(
        name="icosahedral-pair",
        functions=(f1, f3),
        degrees=(6, 10),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "branch-cycle",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_icosahedral_pair_model,
        branch=(_ICOSA_BRANCH["f1"], _ICOSA_BRANCH["f3"]),
        scan_bound=500,
        scan_samples=25,
        note="Degree 6 and 10 maps with icosahedral geometric monodromy "
        "branching over 0, 1728 and infinity; the S_5 overgroup is covered "
        "by the two point stabilizers.",
    )


def _icosahedral_triple_entry() -> CatalogEntry:
    f1, f2, _, x5 = _icosahedral_functions()
    return CatalogEntry(
        name="icosahedral-triple",
        functions=(f1, f2, x5),
        degrees=(6, 5, 5),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "branch-cycle",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_icosahedral_triple_model,
        branch=(_ICOSA_BRANCH["f1"], _ICOSA_BRANCH["f2"], _ICOSA_BRANCH["x5"]),
        scan_bound=500,
        scan_samples=25,
        note="The degree 6 and 5 icosahedral maps need the fifth-power "
        "monomial: elements of shape (3,2) fix nothing in either "
        "icosahedral block and are caught by the coupled affine block.",
    )


def _m11_entry() -> CatalogEntry:
    f1, f2 = _stored_functions("m11-pair")
    return CatalogEntry(
        name="m11-pair",
        functions=(f1, f2),
        degrees=(11, 12),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "checksum",
            "group-order",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_m11_model,
        branch=(
            {
                Fraction(0): (3, 3, 3, 1, 1),
                GENERIC_ALGEBRAIC: (2, 2, 2, 2, 1, 1, 1),
                INF: (4, 4, 1, 1, 1),
            },
            {
                Fraction(0): (3, 3, 3, 1, 1, 1),
                GENERIC_ALGEBRAIC: (2, 2, 2, 2, 1, 1, 1, 1),
                INF: (4, 4, 2, 2),
            },
        ),
        scan_bound=500,
        scan_samples=10,
        drop_bound=500,
        drop_samples=10,
        note=_data()["m11-pair"]["note"],
    )


def _pgl28_entry() -> CatalogEntry:
    f1, f2 = _stored_functions("pgl28-pair")
    return CatalogEntry(
        name="pgl28-pair",
        functions=(f1, f2),
        degrees=(9, 28),
        minimal=True,
        checks=("degrees", "branch-data", "checksum", "scan", "minimality"),
        branch=(
            {
                Fraction(0): (3, 3, 3),
                Fraction(442368): (2, 2, 2, 2, 1),
                INF: (7, 1, 1),
            },
            {
                Fraction(0): (3,) * 9 + (1,),
                Fraction(442368): (2,) * 12 + (1,) * 4,
                INF: (7, 7, 7, 7),
            },
        ),
        scan_bound=300,
        scan_samples=6,
        drop_bound=300,
        drop_samples=6,
        note=_data()["pgl28-pair"]["note"],
    )


def _quartic_entry(a=Fraction(0), b=Fraction(1)) -> CatalogEntry:
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        raise ValueError("b = 0 degenerates the quartic to a biquadratic")
    f1 = ratfunc_make(Poly([0, b, a, 0, 1], QQ), Poly([Fraction(1)], QQ))
    f2 = ratfunc_make(Poly([b * b, -a * a, -2 * a, -1], QQ), Poly([0, 4], QQ))
    default = (a, b) == (0, 1)
    return CatalogEntry(
        name="quartic-resolvent",
        functions=(f1, f2),
        degrees=(4, 3),
        minimal=True,
        checks=(
            ("degrees", "branch-data") if default else ("degrees",)
        )
        + (
            "resolvent",
            "s4-evidence",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_quartic_model,
        branch=(
            {GENERIC_ALGEBRAIC: None, INF: (4,)},
            {GENERIC_ALGEBRAIC: None, INF: (2, 1)},
        )
        if default
        else (None, None),
        resolvent_pairs=((0, 1),),
        scan_bound=500,
        scan_samples=25,
        params=(a, b),
        note="A quartic and its cubic resolvent share a splitting field; "
        "the natural and the dihedral-coset blocks cover the symmetric "
        "group on four letters.",
    )


def _s6_entry() -> CatalogEntry:
    f1 = ratfunc_from_ints([0, 0, 0, 0, 0, -6, 5])
    f2 = ratfunc_make(
        poly_from_ints([0, 46656]),
        _ppow(poly_from_ints([-1, 1]), 3)
        * _ppow(poly_from_ints([-16, 1]), 2)
        * poly_from_ints([-25, 1]),
    )
    f3 = ratfunc_from_ints([-1, 0, 5])
    return CatalogEntry(
        name="s6-triple",
        functions=(f1, f2, f3),
        degrees=(6, 6, 2),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "resolvent",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=_s6_model,
        branch=(
            {Fraction(0): (5, 1), Fraction(-1): (2, 1, 1, 1, 1), INF: (6,)},
            {Fraction(0): (5, 1), Fraction(-1): (2, 2, 2), INF: (3, 2, 1)},
            {Fraction(-1): (2,), INF: (2,)},
        ),
        resolvent=((0, (5, 5), "class"), (2, (5, 5), "class")),
        resolvent_pairs=((0, 2),),
        scan_bound=500,
        scan_samples=25,
        note="Two degree-6 maps related by the outer automorphism of the "
        "symmetric group on six letters, plus the quadratic that kills "
        "the sign obstruction; inertia images are a 5-cycle, a "
        "transposition and a 6-cycle.",
    )


def _tp_partition(p: int) -> tuple[int, ...]:
    return (2,) * ((p - 1) // 2) + (1,)


def _chebyshev_monomial_entry(p=3) -> CatalogEntry:
    p = _as_int(p)
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError("parameter must be an odd prime")
    xp = ratfunc_from_ints([0] * p + [1])
    tp = _as_ratfunc(chebyshev(p))
    f3 = quadratic_companion(poly_from_ints([-1, 0, 1]))
    return CatalogEntry(
        name="chebyshev-monomial",
        functions=(xp, tp, f3),
        degrees=(p, p, 2),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "resolvent",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=lambda: _chebyshev_monomial_model(p),
        branch=(
            {Fraction(0): (p,), INF: (p,)},
            {Fraction(1): _tp_partition(p), Fraction(-1): _tp_partition(p), INF: (p,)},
            {Fraction(1): (2,), Fraction(-1): (2,)},
        ),
        resolvent=((1, (-1, 0, 1), "radical"), (2, (-1, 0, 1), "class")),
        scan_bound=1000,
        scan_samples=25,
        params=(p,),
        note="A degree-p monomial and the degree-p Chebyshev polynomial "
        "miss the pairs of affine maps with multipliers of opposite square "
        "class; the companion quadratic of t^2-1 covers them.",
    )


def _many_redei_entry(p=3, r=2) -> CatalogEntry:
    p, r = _as_int(p), _as_int(r)
    if not is_prime(p) or p % 4 != 3:
        raise ValueError("parameter p must be a prime congruent to 3 mod 4")
    if r < 1:
        raise ValueError("need at least one twisted member")
    ds: list[int] = []
    c = 2
    while len(ds) < r:
        if is_prime(c):
            ds.append(c)
        c += 1
    tp = _as_ratfunc(chebyshev(p))
    mu = disc_square_class(tp)
    prod = 1
    for d in ds:
        prod *= d
    D = mu * poly_from_ints([prod])
    fr1 = quadratic_companion(D)
    fs = (tp,) + tuple(redei(p, d) for d in ds) + (fr1,)
    resolvent = [(0, (p, 0, -p), "class")]
    for i, d in enumerate(ds):
        resolvent.append((i + 1, (-d, 0, 1), "radical"))
        resolvent.append((i + 1, (-p * d,), "class"))
    resolvent.append((r + 1, tuple(D.coeffs), "class"))
    return CatalogEntry(
        name="many-redei",
        functions=fs,
        degrees=(p,) * (r + 1) + (2,),
        minimal=True,
        checks=(
            "degrees",
            "branch-data",
            "resolvent",
            "scan",
            "minimality",
            "model-cover",
            "model-consistency",
        ),
        model=lambda: _many_redei_model(p, tuple(ds)),
        branch=(
            {Fraction(1): _tp_partition(p), Fraction(-1): _tp_partition(p), INF: (p,)},
        )
        + tuple({GENERIC_ALGEBRAIC: (p,)} for _ in ds)
        + ({Fraction(1): (2,), Fraction(-1): (2,)},),
        resolvent=tuple(resolvent),
        scan_bound=1000,
        scan_samples=25,
        params=(p, r),
        note="The degree-p Chebyshev polynomial, its twists by the first "
        "r primes, and the companion quadratic of the product class; each "
        "twist owns one sign character, so dropping any member frees a "
        "sign pattern.",
    )


def _semilinear_entry(p=3) -> CatalogEntry:
    p = _as_int(p)
    if p not in (3, 5):
        raise ValueError("parameter must be 3 or 5")
    return CatalogEntry(
        name="semilinear-model",
        functions=(),
        degrees=(),
        minimal=None,
        checks=("frobenius-fixed-point", "covering-replay"),
        model=lambda: _semilinear_model(p),
        params=(p,),
        note="Abstract covering pattern on the semilinear affine group of "
        "the quadratic field extension: the rational functions behind it "
        "come from genus-one data and are out of scope, the permutation "
        "argument is what gets replayed.",
    )


_BUILDERS: dict[str, Callable[..., CatalogEntry]] = {
    "intro-triple": _intro_entry,
    "icosahedral-pair": _icosahedral_pair_entry,
    "icosahedral-triple": _icosahedral_triple_entry,
    "m11-pair": _m11_entry,
    "pgl28-pair": _pgl28_entry,
    "quartic-resolvent": _quartic_entry,
    "s6-triple": _s6_entry,
    "chebyshev-monomial": _chebyshev_monomial_entry,
    "many-redei": _many_redei_entry,
    "semilinear-model": _semilinear_entry,
}


def entry_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def _as_int(x) -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError("parameter must be an integer")
    return int(x)


def entry(name: str) -> CatalogEntry:
    """Build a catalog entry from its name, with optional call-syntax
    parameters: entry("many-redei(7,2)")."""
    base, args = name, ()
    if name.endswith(")"):
        head, _, tail = name.partition("(")
        if not _ or not tail:
            raise KeyError(f"malformed entry name {name!r}")
        base = head.strip()
        body = tail[:-1].strip()
        if body:
            try:
                args = tuple(Fraction(part.strip()) for part in body.split(","))
            except (ValueError, ZeroDivisionError) as exc:
                raise KeyError(f"bad parameters in {name!r}: {exc}") from None
    builder = _BUILDERS.get(base)
    if builder is None:
        known = ", ".join(sorted(_BUILDERS))
        raise KeyError(f"unknown catalog entry {base!r}; known entries: {known}")
    return builder(*args)


# ---------------------------------------------------------------------------
# checks

_CHECKS: dict[str, Callable[[CatalogEntry], dict]] = {}


def _check(name: str):
    def deco(fn):
        _CHECKS[name] = fn
        return fn

    return deco


@_check("degrees")
def _check_degrees(e: CatalogEntry) -> dict:
    got = tuple(f.degree for f in e.functions)
    return {"ok": got == e.degrees, "got": list(got), "want": list(e.degrees)}


@_check("branch-data")
def _check_branch_data(e: CatalogEntry) -> dict:
    ok = True
    rows = []
    for f, want in zip(e.functions, e.branch):
        if want is None:
            continue
        bd = _branch(f)
        got = {k: part for k, part in bd.partitions}
        deficit = bd.rh_deficit_from_disc()
        good = got == want and deficit == 0
        ok = ok and good
        rows.append({"degree": f.degree, "partitions_match": got == want, "rh_deficit": deficit})
    return {"ok": ok, "per_function": rows}


@_check("resolvent")
def _check_resolvent(e: CatalogEntry) -> dict:
    ok = True
    rows = []
    for idx, coeffs, mode in e.resolvent:
        f = e.functions[idx]
        want = poly_from_ints(coeffs)
        if mode == "radical":
            good = quadratic_resolvent(f) == want
        else:
            good = square_class_equal(disc_square_class(f), want)
        ok = ok and good
        rows.append({"index": idx, "mode": mode, "ok": good})
    for i, j in e.resolvent_pairs:
        good = square_class_equal(
            disc_square_class(e.functions[i]), disc_square_class(e.functions[j])
        )
        ok = ok and good
        rows.append({"pair": [i, j], "ok": good})
    return {"ok": ok, "classes": rows}


@_check("checksum")
def _check_checksum(e: CatalogEntry) -> dict:
    # transcription guard for stored fixtures: degrees, one shared finite
    # branch polynomial, zero Riemann-Hurwitz deficit for every member
    bds = [_branch(f) for f in e.functions]
    same = all(
        bd.finite_branch_polynomial == bds[0].finite_branch_polynomial for bd in bds
    )
    rh = all(bd.rh_deficit_from_disc() == 0 for bd in bds)
    degs = tuple(f.degree for f in e.functions) == e.degrees
    return {"ok": same and rh and degs, "shared_branch_polynomial": same, "rh_all_zero": rh}


@_check("group-order")
def _check_group_order(e: CatalogEntry) -> dict:
    spec = _data()[e.name]["generators"]
    n = int(spec["degree"])
    gens = [perm_from_cycles(n, [tuple(c) for c in cyc]) for cyc in spec["cycles"]]
    G = generate(gens)
    ok = G.order == 7920 and is_transitive(G) and gens == m11_generators()
    return {"ok": ok, "order": G.order, "transitive": is_transitive(G)}


@_check("branch-cycle")
def _check_branch_cycle(e: CatalogEntry) -> dict:
    # a rational branch point with a 5-cycle inertia image forces the
    # arithmetic group to realize every power coprime to 5 by conjugation;
    # the even subgroup only realizes inversion
    five = perm_from_cycles(5, [(0, 1, 2, 3, 4)])
    full = branch_cycle_constraint(symmetric_group(5), five)
    even = branch_cycle_constraint(alternating_group(5), five)
    ok = full == frozenset({1, 2, 3, 4}) and even == frozenset({1, 4})
    return {"ok": ok, "symmetric": sorted(full), "alternating": sorted(even)}


@_check("s4-evidence")
def _check_s4_evidence(e: CatalogEntry) -> dict:
    model = e.model()
    want = model_cycle_tuples(model)
    prs = list(primes_up_to(300))
    observed = set()
    for t0 in (Fraction(2), Fraction(3), Fraction(5), Fraction(7), Fraction(-2)):
        observed |= set(sample_cycle_types(e.functions, t0, prs).good_tuples())
    return {"ok": observed == want, "observed": len(observed), "expected": len(want)}


@_check("scan")
def _check_scan(e: CatalogEntry) -> dict:
    samples = default_t0_samples(e.functions, count=e.scan_samples)
    agg = check_locally_representing(e.functions, samples, B=e.scan_bound)
    return {
        "ok": agg.passed,
        "prime_bound": e.scan_bound,
        "samples": len(samples),
        "failures": [(str(t0), p) for t0, p in agg.failures],
    }


@_check("minimality")
def _check_minimality(e: CatalogEntry) -> dict:
    rep = check_minimality(
        e.functions, B=e.drop_bound, sample_count=e.drop_samples
    )
    want = "minimal" if e.minimal else "inconclusive"
    return {
        "ok": rep.verdict == want,
        "verdict": rep.verdict,
        "witnesses": [
            [i, None if w is None else [str(w[0]), w[1]]] for i, w in rep.entries
        ],
    }


@_check("model-cover")
def _check_model_cover(e: CatalogEntry) -> dict:
    model = e.model()
    if model is None:
        return {"ok": True, "skipped": "model search budget exhausted"}
    cert = certify_with_group(model)
    ok = cert.covered and (cert.minimal if e.minimal else True)
    return {
        "ok": ok,
        "covered": cert.covered,
        "minimal": cert.minimal,
        "group_order": model.group.order,
    }


@_check("model-consistency")
def _check_model_consistency(e: CatalogEntry) -> dict:
    model = e.model()
    if model is None:
        return {"ok": True, "skipped": "model search budget exhausted"}
    prs = list(primes_up_to(250))
    observations = [
        sample_cycle_types(e.functions, t0, prs)
        for t0 in default_t0_samples(e.functions, count=8)
    ]
    res = group_consistency(observations, model)
    return {
        "ok": res["subset_ok"],
        "coverage": str(res["coverage"]),
        "missing": len(res["missing"]),
        "extra": [[list(part) for part in t] for t in res["extra"]],
    }


@_check("frobenius-fixed-point")
def _check_frobenius_fixed_point(e: CatalogEntry) -> dict:
    p = int(e.params[0])
    q, _, _ = _fp2_tables(p)
    N = agl1_fp2(p)
    translations = set(fp2_translations(p).elements)
    ident = identity(q)
    ok = True
    for g in N.elements:
        fixed = sum(1 for x in range(q) if g[x] == x)
        want = q if g == ident else (0 if g in translations else 1)
        if fixed != want:
            ok = False
            break
    return {"ok": ok, "points": q, "affine_order": N.order}


@_check("covering-replay")
def _check_covering_replay(e: CatalogEntry) -> dict:
    signed = e.model()
    F = signed.source
    covered, witness = coset_fpf_check(signed, F, identity(F.degree))
    return {
        "ok": covered and witness is None,
        "group_order": F.order,
        "degree": signed.degree,
    }


def entry_verify(name: str) -> dict[str, dict]:
    """Run every check of the named entry; result dicts carry an "ok" key
    plus check-specific detail, keyed by check identifier in plan order."""
    e = entry(name)
    return {chk: _CHECKS[chk](e) for chk in e.checks}
