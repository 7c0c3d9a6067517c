"""Finite permutation groups by exhaustive enumeration.

Everything here works at desk scale: groups are fully enumerated element
lists (hard cap, default 2 * 10**6, override with LOCREP_CAP), and every
covering or fixed-point question is answered by a direct filter over the
list. No stabilizer chains, no character theory.

A permutation is a tuple of images on {0..degree-1}. The product
``compose(a, b)`` applies b first, then a, matching function composition;
all constructions below use this one convention.

A MarkedAction carries an abstract ("source") group together with its
permutation images on a partitioned point set. Blocks are labeled
contiguous ranges; each label models one rational function of a set, the
block being the coset space of the corresponding root stabilizer. The
covering question "does every group element fix a point somewhere" and its
per-label minimality refinements are answered by scanning the images.
"""

from __future__ import annotations

import itertools
import os
import random
from dataclasses import dataclass

Perm = tuple[int, ...]

DEFAULT_CAP = 2_000_000


class CapExceeded(RuntimeError):
    pass


def _cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("LOCREP_CAP")
    return int(env) if env else DEFAULT_CAP


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(a: Perm, b: Perm) -> Perm:
    """a after b: (a*b)(i) = a[b[i]]."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_from_cycles(n: int, cycles) -> Perm:
    out = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            out[x] = cyc[(i + 1) % len(cyc)]
    return tuple(out)


def cycle_lengths(a: Perm) -> list[int]:
    seen = [False] * len(a)
    out = []
    for i in range(len(a)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = a[j]
            length += 1
        out.append(length)
    return out


def cycle_type(a: Perm) -> tuple[int, ...]:
    """Cycle lengths sorted ascending (fixed points count as 1-cycles)."""
    return tuple(sorted(cycle_lengths(a)))


def block_cycle_types(a: Perm, blocks) -> tuple[tuple[int, ...], ...]:
    """Cycle type of a restricted to each (label, start, length) block.
    Blocks must be a-invariant, which holds for any MarkedAction image."""
    out = []
    for _, start, length in blocks:
        sub = tuple(a[start + j] - start for j in range(length))
        if any(x < 0 or x >= length for x in sub):
            raise ValueError("permutation does not preserve the block")
        out.append(cycle_type(sub))
    return tuple(out)


def ind(a: Perm) -> int:
    """degree minus number of cycles; additive over branch points in the
    genus formula."""
    return len(a) - len(cycle_lengths(a))


def order_of(a: Perm) -> int:
    import math
    o = 1
    for c in cycle_lengths(a):
        o = o * c // math.gcd(o, c)
    return o


def perm_sign(a: Perm) -> int:
    return -1 if ind(a) % 2 else 1


def perm_pow(a: Perm, k: int) -> Perm:
    n = len(a)
    if k < 0:
        a, k = inverse(a), -k
    out = identity(n)
    while k:
        if k & 1:
            out = compose(out, a)
        a = compose(a, a)
        k >>= 1
    return out


@dataclass(frozen=True)
class GroupSpec:
    degree: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]
    order: int

    def __post_init__(self):
        assert self.order == len(self.elements)

    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)


def group_from_elements(elements, generators=None, degree=None) -> GroupSpec:
    elems = tuple(sorted(set(elements)))
    if degree is None:
        degree = len(elems[0])
    if generators is None:
        generators = small_generating_set(elems)
    return GroupSpec(degree, tuple(generators), elems, len(elems))


def generate(generators, cap: int | None = None) -> GroupSpec:
    """Closure of the generators under products, breadth first."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise ValueError("no generators")
    n = len(gens[0])
    if any(len(g) != n for g in gens):
        raise ValueError("generators have unequal degree")
    limit = _cap(cap)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > limit:
                        raise CapExceeded(
                            f"group order exceeds cap {limit}")
                    nxt.append(h)
        frontier = nxt
    return GroupSpec(n, tuple(gens), tuple(sorted(seen)), len(seen))


def small_generating_set(elements) -> tuple[Perm, ...]:
    """Greedy generating set for an enumerated group; linear passes only."""
    elems = sorted(set(elements))
    n = len(elems[0])
    target = len(elems)
    gens: list[Perm] = []
    closed = {identity(n)}
    for g in elems:
        if g in closed:
            continue
        gens.append(g)
        frontier = [g]
        closed.add(g)
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    for h in (compose(x, s), compose(s, x)):
                        if h not in closed:
                            closed.add(h)
                            nxt.append(h)
            frontier = nxt
        if len(closed) == target:
            break
    return tuple(gens) if gens else (identity(n),)


def orbits(G: GroupSpec) -> list[tuple[int, ...]]:
    n = G.degree
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i]:
            continue
        orb = {i}
        frontier = [i]
        seen[i] = True
        while frontier:
            nxt = []
            for x in frontier:
                for g in G.generators:
                    y = g[x]
                    if not seen[y]:
                        seen[y] = True
                        orb.add(y)
                        nxt.append(y)
            frontier = nxt
        out.append(tuple(sorted(orb)))
    return out


def is_transitive(G: GroupSpec) -> bool:
    return len(orbits(G)) == 1


def point_stabilizer(G: GroupSpec, pt: int) -> GroupSpec:
    elems = tuple(g for g in G.elements if g[pt] == pt)
    return GroupSpec(G.degree, small_generating_set(elems), elems, len(elems))


def is_subgroup(G: GroupSpec, U: GroupSpec) -> bool:
    return U.degree == G.degree and U.element_set() <= G.element_set()


def conjugate_set(g: Perm, elems) -> frozenset[Perm]:
    gi = inverse(g)
    return frozenset(compose(compose(g, u), gi) for u in elems)


def union_of_conjugates(G: GroupSpec, U: GroupSpec) -> frozenset[Perm]:
    """All elements lying in some G-conjugate of U."""
    seen_subs = set()
    covered: set[Perm] = set()
    uset = U.element_set()
    for g in G.elements:
        conj = conjugate_set(g, uset)
        if conj not in seen_subs:
            seen_subs.add(conj)
            covered |= conj
    return frozenset(covered)


def subgroups_up_to_conjugacy(G: GroupSpec) -> list[GroupSpec]:
    """All subgroups of G, one representative per conjugacy class,
    sorted by order then element list. Exhaustive; meant for |G| <= ~100."""
    ident = identity(G.degree)
    all_subs: set[frozenset[Perm]] = {frozenset({ident})}
    frontier = [frozenset({ident})]
    while frontier:
        H = frontier.pop()
        for g in G.elements:
            if g in H:
                continue
            K = _closure_set(H | {g})
            if K not in all_subs:
                all_subs.add(K)
                frontier.append(K)
    classes: dict[frozenset, frozenset] = {}
    for H in all_subs:
        canon = min((conjugate_set(g, H) for g in G.elements),
                    key=lambda s: tuple(sorted(s)))
        classes.setdefault(canon, H)
    reps = [group_from_elements(H, degree=G.degree)
            for H in classes.values()]
    reps.sort(key=lambda s: (s.order, s.elements))
    return reps


def _closure_set(seed: set[Perm] | frozenset[Perm]) -> frozenset[Perm]:
    closed = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for s in seed:
                h = compose(x, s)
                if h not in closed:
                    closed.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(closed)


# ---------------------------------------------------------------------------
# marked actions


@dataclass(frozen=True)
class MarkedAction:
    """A group acting on a labeled, partitioned point set.

    group: the image group on the points (faithful by construction).
    blocks: (label, start, length) ranges partitioning {0..degree-1}.
    source: the abstract group the action came from; images[i] is the
    permutation induced by source.elements[i]. When the action is faithful,
    source and group have equal order; coset actions may collapse.
    """
    group: GroupSpec
    blocks: tuple[tuple[str, int, int], ...]
    source: GroupSpec
    images: tuple[Perm, ...]

    @property
    def degree(self) -> int:
        return self.group.degree

    def labels(self) -> list[str]:
        out = []
        for lab, _, _ in self.blocks:
            if lab not in out:
                out.append(lab)
        return out

    def points_of(self, labels) -> tuple[int, ...]:
        pts = []
        for lab, start, length in self.blocks:
            if lab in labels:
                pts.extend(range(start, start + length))
        return tuple(pts)

    def pairs(self):
        """(source element, image permutation), in source element order."""
        return zip(self.source.elements, self.images)

    def image_of(self, g: Perm) -> Perm:
        return self.images[self.source.elements.index(g)]


def _image_group(source: GroupSpec, images, degree: int) -> GroupSpec:
    idx = {g: i for i, g in enumerate(source.elements)}
    gen_imgs = tuple(images[idx[g]] for g in source.generators)
    elems = tuple(sorted(set(images)))
    return GroupSpec(degree, gen_imgs, elems, len(elems))


def natural_action(G: GroupSpec, label: str) -> MarkedAction:
    return MarkedAction(G, ((label, 0, G.degree),), G, G.elements)


def empty_action(G: GroupSpec) -> MarkedAction:
    triv = GroupSpec(0, ((),), ((),), 1)
    return MarkedAction(triv, (), G, tuple(() for _ in G.elements))


def coset_action(G: GroupSpec, U: GroupSpec, label: str) -> MarkedAction:
    """Action of G on the cosets gU by left multiplication, one block.

    Left cosets keep x -> (its permutation) a homomorphism under the
    apply-right-factor-first composition convention, so coset blocks can
    be combined and fed to fibered products. The point order is
    deterministic: cosets numbered by their least element."""
    if not is_subgroup(G, U):
        raise ValueError("U is not a subgroup of G")
    coset_of: dict[Perm, int] = {}
    reps: list[Perm] = []
    for g in G.elements:
        if g in coset_of:
            continue
        k = len(reps)
        reps.append(g)
        coset_of[g] = k
        frontier = [g]
        while frontier:
            nxt = []
            for x in frontier:
                for s in U.generators:
                    y = compose(x, s)
                    if y not in coset_of:
                        coset_of[y] = k
                        nxt.append(y)
            frontier = nxt
    m = len(reps)
    images = tuple(
        tuple(coset_of[compose(x, reps[i])] for i in range(m))
        for x in G.elements)
    grp = _image_group(G, images, m)
    return MarkedAction(grp, ((label, 0, m),), G, images)


def combine_actions(actions: list[MarkedAction]) -> MarkedAction:
    """Disjoint union of actions of one and the same source group."""
    if not actions:
        raise ValueError("no actions")
    src = actions[0].source
    for a in actions[1:]:
        if a.source.elements != src.elements:
            raise ValueError("actions have different source groups")
    blocks = []
    offset = 0
    for a in actions:
        for lab, start, length in a.blocks:
            blocks.append((lab, start + offset, length))
        offset += a.degree
    images = []
    for i in range(len(src.elements)):
        parts = []
        off = 0
        for a in actions:
            parts.extend(x + off for x in a.images[i])
            off += a.degree
        images.append(tuple(parts))
    images = tuple(images)
    grp = _image_group(src, images, offset)
    return MarkedAction(grp, tuple(blocks), src, images)


def union_coset_action(G: GroupSpec, labeled_subgroups) -> MarkedAction:
    """Marked action on the union of the coset spaces G/U_i."""
    return combine_actions(
        [coset_action(G, U, lab) for lab, U in labeled_subgroups])


def sign_character_action(base: MarkedAction | GroupSpec, U: GroupSpec,
                          label: str) -> MarkedAction:
    """Append a 2-point block on which U-elements act trivially and the
    rest of the group swaps; U must have index 2."""
    A = natural_action(base, "_natural") if isinstance(base, GroupSpec) else base
    G = A.source
    if 2 * U.order != G.order:
        raise ValueError("subgroup does not have index 2")
    if not is_subgroup(G, U):
        raise ValueError("U is not a subgroup of G")
    uset = U.element_set()
    d = A.degree
    images = tuple(
        img + ((d, d + 1) if g in uset else (d + 1, d))
        for g, img in A.pairs())
    blocks = A.blocks + ((label, d, 2),)
    grp = _image_group(G, images, d + 2)
    return MarkedAction(grp, blocks, G, images)


def direct_product_action(actions: list[MarkedAction],
                          cap: int | None = None) -> MarkedAction:
    """Direct product of the acting groups on the disjoint union of the
    point sets."""
    limit = _cap(cap)
    total_order = 1
    for a in actions:
        total_order *= a.group.order
        if total_order > limit:
            raise CapExceeded(f"product order exceeds cap {limit}")
    offsets = []
    off = 0
    for a in actions:
        offsets.append(off)
        off += a.degree
    degree = off
    elems = []
    for combo in itertools.product(*(a.group.elements for a in actions)):
        parts = []
        for part, o in zip(combo, offsets):
            parts.extend(x + o for x in part)
        elems.append(tuple(parts))
    elems = tuple(sorted(elems))
    gens = []
    for i, a in enumerate(actions):
        for s in a.group.generators:
            parts = []
            for j, b in enumerate(actions):
                block = s if j == i else identity(b.degree)
                parts.extend(x + offsets[j] for x in block)
            gens.append(tuple(parts))
    grp = GroupSpec(degree, tuple(gens), elems, len(elems))
    blocks = []
    for a, o in zip(actions, offsets):
        for lab, start, length in a.blocks:
            blocks.append((lab, start + o, length))
    return MarkedAction(grp, tuple(blocks), grp, elems)


def fibered_product(G: GroupSpec, H: GroupSpec, q1, q2,
                    cap: int | None = None) -> GroupSpec:
    """{(g, h) : q1(g) = q2(h)} acting on the disjoint union of the point
    sets. q1, q2 map elements to permutations of a common target group and
    must be homomorphisms (verified by element x generator exhaustion)."""
    q1 = _as_map(q1, G)
    q2 = _as_map(q2, H)
    _check_homomorphism(G, q1)
    _check_homomorphism(H, q2)
    limit = _cap(cap)
    by_val: dict[Perm, list[Perm]] = {}
    for h in H.elements:
        by_val.setdefault(q2[h], []).append(h)
    dG = G.degree
    elems = []
    for g in G.elements:
        for h in by_val.get(q1[g], ()):
            elems.append(g + tuple(x + dG for x in h))
            if len(elems) > limit:
                raise CapExceeded(f"fibered product exceeds cap {limit}")
    if not elems:
        raise ValueError("empty fiber: maps have disjoint images")
    return group_from_elements(elems, degree=dG + H.degree)


def _as_map(q, G: GroupSpec) -> dict[Perm, Perm]:
    if callable(q):
        q = {g: tuple(q(g)) for g in G.elements}
    missing = [g for g in G.elements if g not in q]
    if missing:
        raise ValueError("quotient map not defined on all elements")
    return q


def _check_homomorphism(G: GroupSpec, q: dict[Perm, Perm]) -> None:
    # q(g*s) = q(g)*q(s) for all g and generating s forces q to be a
    # homomorphism on the whole group
    for g in G.elements:
        qg = q[g]
        for s in G.generators:
            if q[compose(g, s)] != compose(qg, q[s]):
                raise ValueError("quotient map is not a homomorphism")


def wreath_product(G: GroupSpec, t: int, mode: str,
                   cap: int | None = None) -> GroupSpec:
    """G wr S_t, either on t disjoint copies (imprimitive, degree m*t) or
    on t-tuples (product action, degree m^t)."""
    if mode not in ("imprimitive", "product"):
        raise ValueError(f"unknown wreath mode {mode!r}")
    import math
    limit = _cap(cap)
    m = G.degree
    order = G.order ** t * math.factorial(t)
    degree = m * t if mode == "imprimitive" else m ** t
    if order > limit or degree > limit:
        raise CapExceeded(f"wreath product exceeds cap {limit}")
    tops = sorted(itertools.permutations(range(t)))
    elems = []
    if mode == "imprimitive":
        for vec in itertools.product(G.elements, repeat=t):
            for tau in tops:
                img = [0] * degree
                for j in range(t):
                    gj = vec[j]
                    for x in range(m):
                        img[j * m + x] = tau[j] * m + gj[x]
                elems.append(tuple(img))
    else:
        points = list(itertools.product(range(m), repeat=t))
        index = {pt: i for i, pt in enumerate(points)}
        tau_inv = {tau: inverse(tau) for tau in tops}
        for vec in itertools.product(G.elements, repeat=t):
            for tau in tops:
                ti = tau_inv[tau]
                img = [0] * degree
                for i, pt in enumerate(points):
                    img[i] = index[tuple(vec[j][pt[ti[j]]]
                                         for j in range(t))]
                elems.append(tuple(img))
    return group_from_elements(elems, degree=degree)


# ---------------------------------------------------------------------------
# covering checks


@dataclass(frozen=True)
class CoverReport:
    covered: bool
    witness: Perm | None = None
    per_subset: tuple[tuple[str, Perm | None], ...] | None = None

    @property
    def minimal(self) -> bool | None:
        if self.per_subset is None:
            return None
        return all(w is not None for _, w in self.per_subset)

    def to_json(self) -> dict:
        out: dict = {"covered": self.covered}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.per_subset is not None:
            out["minimal"] = self.minimal
            out["drop_witnesses"] = {
                lab: (list(w) if w is not None else None)
                for lab, w in self.per_subset}
        return out


def normal_covering_check(G: GroupSpec, subgroups) -> CoverReport:
    """Does every element of G lie in a conjugate of some subgroup?"""
    covered: set[Perm] = set()
    for U in subgroups:
        if U.order >= G.order or not is_subgroup(G, U):
            raise ValueError("subgroups must be proper subgroups of G")
        covered |= union_of_conjugates(G, U)
    for g in G.elements:
        if g not in covered:
            return CoverReport(False, g)
    return CoverReport(True)


def fixed_point_free_elements(A: MarkedAction, restrict_to=None,
                              first_only: bool = False) -> list[Perm]:
    """Source elements whose image fixes no point in the selected blocks."""
    if restrict_to is None:
        pts = range(A.degree)
    else:
        pts = A.points_of(set(restrict_to))
    pts = tuple(pts)
    out = []
    for g, img in A.pairs():
        if all(img[x] != x for x in pts):
            out.append(g)
            if first_only:
                return out
    return out


def minimal_covering_check(A: MarkedAction) -> CoverReport:
    """Covering plus drop-one-label witnesses. Minimal iff every maximal
    proper label subset admits an element fixed point free on it."""
    fpf = fixed_point_free_elements(A, first_only=True)
    if fpf:
        return CoverReport(False, fpf[0])
    labels = A.labels()
    per = []
    for lab in labels:
        keep = [l for l in labels if l != lab]
        wits = fixed_point_free_elements(A, restrict_to=keep, first_only=True)
        per.append((lab, wits[0] if wits else None))
    return CoverReport(True, None, tuple(per))


def coset_fpf_check(A: MarkedAction, N: GroupSpec, sigma: Perm):
    """Does every element of the coset sigma*N fix a point in some block?
    Returns (True, None) or (False, witness). N must be normal in the
    source group."""
    G = A.source
    nset = N.element_set()
    if sigma not in G.element_set():
        raise ValueError("sigma not in the group")
    if not nset <= G.element_set():
        raise ValueError("N is not a subgroup of the group")
    if N.order < G.order:
        for s in G.generators:
            if conjugate_set(s, nset) != nset:
                raise ValueError("N is not normal")
    idx = {g: i for i, g in enumerate(G.elements)}
    coset = sorted(compose(sigma, n) for n in N.elements)
    for g in coset:
        img = A.images[idx[g]]
        if all(img[x] != x for x in range(A.degree)):
            return False, g
    return True, None


def branch_cycle_constraint(A: GroupSpec, sigma: Perm) -> frozenset[int]:
    """{m in (Z/eZ)^* : sigma^m is A-conjugate to sigma}, e = order(sigma).
    Over Q a realizable inertia generator at a rational branch point must
    give the full unit group."""
    import math
    if sigma not in A.element_set():
        raise ValueError("sigma not in the group")
    e = order_of(sigma)
    if e == 1:
        return frozenset({0})
    out = set()
    elems = A.elements
    for m in range(1, e):
        if math.gcd(m, e) != 1:
            continue
        target = perm_pow(sigma, m)
        if target == sigma:
            out.add(m)
            continue
        for g in elems:
            if compose(compose(g, sigma), inverse(g)) == target:
                out.add(m)
                break
    return frozenset(out)


# ---------------------------------------------------------------------------
# constructors


def cyclic_group(n: int) -> GroupSpec:
    return generate([tuple((i + 1) % n for i in range(n))])


def symmetric_group(n: int) -> GroupSpec:
    elems = tuple(sorted(itertools.permutations(range(n))))
    if n <= 1:
        gens: tuple[Perm, ...] = (identity(n),)
    else:
        gens = (perm_from_cycles(n, [(0, 1)]),
                tuple((i + 1) % n for i in range(n)))
    return GroupSpec(n, gens, elems, len(elems))


def alternating_group(n: int) -> GroupSpec:
    elems = tuple(p for p in sorted(itertools.permutations(range(n)))
                  if ind(p) % 2 == 0)
    return GroupSpec(n, small_generating_set(elems), elems, len(elems))


def dihedral_group(n: int) -> GroupSpec:
    """Symmetries of the n-gon on its n vertices, order 2n."""
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((n - i) % n for i in range(n))
    return generate([rot, refl])


def agl1(p: int) -> GroupSpec:
    """x -> a*x + b on F_p, order p(p-1)."""
    from .primes import is_prime
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    elems = []
    for a in range(1, p):
        for b in range(p):
            elems.append(tuple((a * x + b) % p for x in range(p)))
    g = _smallest_primitive_root(p)
    gens = [tuple((x + 1) % p for x in range(p))]
    if p > 2:
        gens.append(tuple(g * x % p for x in range(p)))
    return GroupSpec(p, tuple(gens), tuple(sorted(elems)), len(elems))


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise AssertionError("unreachable for prime p")


def _fp2_tables(p: int):
    """F_{p^2} as pairs (c0, c1) mod the lex-smallest monic irreducible
    quadratic x^2 + c1*x + c0; point index c0 + p*c1."""
    from ._kernel import pure
    mod = None
    for c1 in range(p):
        for c0 in range(p):
            cand = [c0, c1, 1]
            if not pure.has_root(cand, p):
                mod = cand
                break
        if mod is not None:
            break
    assert mod is not None
    q = p * p

    def mul(i: int, j: int) -> int:
        a = [i % p, i // p]
        b = [j % p, j // p]
        prod = pure.prem(pure.pmul(a, b, p), mod, p)
        prod += [0] * (2 - len(prod))
        return prod[0] + p * prod[1]

    frob = []
    for i in range(q):
        a = [i % p, i // p]
        f = pure.ppow_mod(a, p, mod, p)
        f += [0] * (2 - len(f))
        frob.append(f[0] + p * f[1])
    return q, mul, tuple(frob)


def _fp2_affine_perm(p, q, mul, frob, a, b, e) -> Perm:
    out = []
    for x in range(q):
        y = frob[x] if e else x
        y = mul(a, y)
        y = ((y % p + b % p) % p) + p * ((y // p + b // p) % p)
        out.append(y)
    return tuple(out)


def agl1_fp2(p: int) -> GroupSpec:
    """x -> a*x + b on F_{p^2}, order p^2(p^2-1), degree p^2."""
    q, mul, frob = _fp2_tables(p)
    elems = []
    for a in range(1, q):
        for b in range(q):
            elems.append(_fp2_affine_perm(p, q, mul, frob, a, b, 0))
    return group_from_elements(elems, degree=q)


def fp2_translations(p: int) -> GroupSpec:
    q, mul, frob = _fp2_tables(p)
    elems = [_fp2_affine_perm(p, q, mul, frob, 1, b, 0) for b in range(q)]
    return group_from_elements(elems, degree=q)


def agammal1(p: int) -> GroupSpec:
    """Semilinear maps x -> a*x^(p^e) + b on F_{p^2}, order 2p^2(p^2-1)."""
    q, mul, frob = _fp2_tables(p)
    elems = []
    for e in (0, 1):
        for a in range(1, q):
            for b in range(q):
                elems.append(_fp2_affine_perm(p, q, mul, frob, a, b, e))
    return group_from_elements(elems, degree=q)


def m11_generators() -> list[Perm]:
    """Standard degree-11 generators: an 11-cycle and a (4,4)-element."""
    a = tuple((i + 1) % 11 for i in range(11))
    b = perm_from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)])
    return [a, b]


def m11_group(cap: int | None = None) -> GroupSpec:
    return generate(m11_generators(), cap=cap)


def m11_degree12_action(G: GroupSpec | None = None, label: str = "g",
                        attempts: int = 400) -> MarkedAction | None:
    """Search for an index-12 subgroup (order 660) by closing random
    2-element subsets, deterministic seed; None if the budget runs out."""
    if G is None:
        G = m11_group()
    rng = random.Random(11)
    for _ in range(attempts):
        x = G.elements[rng.randrange(G.order)]
        y = G.elements[rng.randrange(G.order)]
        try:
            U = generate([x, y], cap=661)
        except CapExceeded:
            continue
        if U.order == 660:
            return coset_action(G, U, label)
    return None
