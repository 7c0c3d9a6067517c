"""Exhaustive permutation-group machinery: actions, coverings, products."""

from __future__ import annotations

import random
from functools import lru_cache

import pytest

from locrep.permgroup import (
    CapExceeded,
    agl1,
    agl1_fp2,
    agammal1,
    alternating_group,
    branch_cycle_constraint,
    combine_actions,
    compose,
    coset_action,
    coset_fpf_check,
    cycle_type,
    cyclic_group,
    dihedral_group,
    direct_product_action,
    fibered_product,
    fixed_point_free_elements,
    fp2_translations,
    generate,
    group_from_elements,
    identity,
    ind,
    inverse,
    is_subgroup,
    is_transitive,
    m11_group,
    minimal_covering_check,
    natural_action,
    normal_covering_check,
    orbits,
    order_of,
    perm_from_cycles,
    perm_pow,
    perm_sign,
    point_stabilizer,
    sign_character_action,
    subgroups_up_to_conjugacy,
    symmetric_group,
    union_coset_action,
    wreath_product,
)

import oracles


def intersect_subgroups(G, U, V):
    common = sorted(U.element_set() & V.element_set())
    return group_from_elements(common, degree=G.degree)


@lru_cache(maxsize=None)
def proper_subgroup_pool(name):
    G = GROUP_POOL[name]()
    subs = [U for U in subgroups_up_to_conjugacy(G) if U.order < G.order]
    return G, subs


GROUP_POOL = {
    "S3": lambda: symmetric_group(3),
    "S4": lambda: symmetric_group(4),
    "A4": lambda: alternating_group(4),
    "A5": lambda: alternating_group(5),
    "D6": lambda: dihedral_group(6),
    "C12": lambda: cyclic_group(12),
    "AGL1(5)": lambda: agl1(5),
    "AGL1(7)": lambda: agl1(7),
}


class TestPermPrimitives:
    def test_compose_applies_right_first(self):
        a = perm_from_cycles(3, [(0, 1)])
        b = perm_from_cycles(3, [(1, 2)])
        # (a o b)(1) = a(b(1)) = a(2) = 2
        assert compose(a, b)[1] == 2

    def test_inverse(self):
        g = perm_from_cycles(5, [(0, 1, 2, 3, 4)])
        assert compose(g, inverse(g)) == identity(5)

    def test_cycle_type_and_order(self):
        g = perm_from_cycles(6, [(0, 1, 2), (3, 4)])
        assert cycle_type(g) == (1, 2, 3)
        assert order_of(g) == 6
        assert perm_pow(g, 6) == identity(6)

    def test_ind_examples(self):
        six_cycle = perm_from_cycles(6, [(0, 1, 2, 3, 4, 5)])
        assert ind(six_cycle) == 5
        assert ind(identity(6)) == 0
        five_and_fix = perm_from_cycles(6, [(0, 1, 2, 3, 4)])
        assert ind(five_and_fix) == 4

    def test_ind_constant_on_conjugacy_classes(self):
        G = symmetric_group(4)
        rng = random.Random(3)
        for _ in range(50):
            g = rng.choice(G.elements)
            h = rng.choice(G.elements)
            conj = compose(compose(h, g), inverse(h))
            assert ind(conj) == ind(g)

    def test_perm_sign(self):
        assert perm_sign(perm_from_cycles(4, [(0, 1)])) == -1
        assert perm_sign(perm_from_cycles(4, [(0, 1), (2, 3)])) == 1


class TestGenerate:
    def test_cyclic(self):
        assert generate([perm_from_cycles(5, [(0, 1, 2, 3, 4)])]).order == 5

    def test_agl1_order(self):
        assert agl1(5).order == 20

    def test_symmetric_alternating(self):
        assert symmetric_group(4).order == 24
        assert alternating_group(4).order == 12
        assert dihedral_group(5).order == 10

    def test_cap_is_enforced(self):
        gens = [perm_from_cycles(9, [(0, 1)]),
                tuple((i + 1) % 9 for i in range(9))]
        with pytest.raises(CapExceeded):
            generate(gens, cap=1000)

    def test_m11_order(self):
        assert m11_group().order == 7920


class TestOrbitsStabilizers:
    def test_orbits(self):
        G = generate([perm_from_cycles(4, [(0, 1), (2, 3)])])
        assert orbits(G) == [(0, 1), (2, 3)]

    def test_point_stabilizer_orders(self):
        assert point_stabilizer(symmetric_group(4), 3).order == 6
        assert point_stabilizer(agl1(5), 0).order == 4
        assert point_stabilizer(dihedral_group(5), 0).order == 2

    def test_agl1_sharply_two_transitive(self):
        G = agl1(5)
        assert is_transitive(G)
        stab = point_stabilizer(G, 0)
        # the stabilizer of 0 acts regularly on the remaining points
        assert is_transitive(group_from_elements(
            [tuple(x - 1 for x in g[1:]) for g in stab.elements],
            degree=4))
        assert G.order == 5 * 4


class TestCosetAction:
    def test_degrees(self):
        S4 = symmetric_group(4)
        D4 = dihedral_group(4)
        assert coset_action(S4, D4, "c").degree == 3
        assert coset_action(S4, S4, "c").degree == 1
        A5 = alternating_group(5)
        a4_in_a5 = point_stabilizer(A5, 4)
        assert a4_in_a5.order == 12
        assert coset_action(A5, a4_in_a5, "c").degree == 5

    def test_is_homomorphism(self):
        G = symmetric_group(4)
        A = coset_action(G, dihedral_group(4), "c")
        rng = random.Random(8)
        for _ in range(60):
            a, b = rng.choice(G.elements), rng.choice(G.elements)
            assert A.image_of(compose(a, b)) == compose(
                A.image_of(a), A.image_of(b))

    def test_rejects_non_subgroup(self):
        with pytest.raises(ValueError):
            coset_action(alternating_group(4),
                         generate([perm_from_cycles(4, [(0, 1)])]), "c")


class TestSubgroupEnumeration:
    def test_s3_classes(self):
        subs = subgroups_up_to_conjugacy(symmetric_group(3))
        assert sorted(U.order for U in subs) == [1, 2, 3, 6]

    def test_s4_classes(self):
        subs = subgroups_up_to_conjugacy(symmetric_group(4))
        assert sorted(U.order for U in subs) == [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]


class TestNormalCovering:
    def test_s4_two_subgroup_covering(self):
        S4 = symmetric_group(4)
        S3 = point_stabilizer(S4, 3)
        D4 = dihedral_group(4)
        rep = normal_covering_check(S4, [S3, D4])
        assert rep.covered and rep.witness is None

    def test_s4_stabilizer_alone_misses_four_cycles(self):
        S4 = symmetric_group(4)
        rep = normal_covering_check(S4, [point_stabilizer(S4, 3)])
        assert not rep.covered
        assert cycle_type(rep.witness) in ((4,), (2, 2))

    def test_cyclic_group_never_covered(self):
        for p in (5, 7):
            G = cyclic_group(p)
            triv = group_from_elements([identity(p)], degree=p)
            assert not normal_covering_check(G, [triv]).covered

    def test_rejects_improper_subgroup(self):
        S4 = symmetric_group(4)
        with pytest.raises(ValueError):
            normal_covering_check(S4, [S4])


class TestFixedPointFree:
    def test_s4_union_with_d4_cosets_has_none(self):
        S4 = symmetric_group(4)
        A = union_coset_action(
            S4, [("quartic", point_stabilizer(S4, 3)), ("resolvent", dihedral_group(4))])
        # align block one with the natural action: stabilizer cosets = points
        assert fixed_point_free_elements(A) == []

    def test_s4_natural_alone_has_some(self):
        A = natural_action(symmetric_group(4), "n")
        wits = fixed_point_free_elements(A)
        assert wits
        assert all(cycle_type(w) in ((2, 2), (4,)) for w in wits)

    def test_restrict_to_labels(self):
        S4 = symmetric_group(4)
        A = union_coset_action(
            S4, [("a", point_stabilizer(S4, 3)), ("b", dihedral_group(4))])
        assert fixed_point_free_elements(A, restrict_to=["a"])
        assert fixed_point_free_elements(A, restrict_to=["b"])

    def test_covering_iff_no_fpf_on_random_instances(self):
        rng = random.Random(2024)
        names = sorted(GROUP_POOL)
        done = 0
        while done < 50:
            G, subs = proper_subgroup_pool(rng.choice(names))
            usable = [U for U in subs if U.order > 1]
            if not usable:
                continue
            chosen = rng.sample(usable, k=min(len(usable), rng.randint(1, 3)))
            rep = normal_covering_check(G, chosen)
            A = union_coset_action(
                G, [(f"u{i}", U) for i, U in enumerate(chosen)])
            fpf = fixed_point_free_elements(A, first_only=True)
            assert rep.covered == (not fpf)
            done += 1


class TestMinimalCovering:
    def intro_model(self):
        gens = [perm_from_cycles(4, [(0, 1)]), perm_from_cycles(4, [(2, 3)])]
        G = generate(gens)
        subs = [U for U in subgroups_up_to_conjugacy(G) if U.order == 2]
        assert len(subs) == 3
        return union_coset_action(G, [(f"f{i}", U) for i, U in enumerate(subs)])

    def test_intro_model_minimal(self):
        rep = minimal_covering_check(self.intro_model())
        assert rep.covered and rep.minimal
        assert len(rep.per_subset) == 3
        assert all(w is not None for _, w in rep.per_subset)

    def test_duplicate_subgroup_not_minimal(self):
        S4 = symmetric_group(4)
        S3 = point_stabilizer(S4, 3)
        D4 = dihedral_group(4)
        A = union_coset_action(S4, [("a", S3), ("b", D4), ("c", D4)])
        rep = minimal_covering_check(A)
        assert rep.covered
        assert rep.minimal is False
        drops = dict(rep.per_subset)
        # dropping b leaves c covering the same elements: no witness
        assert drops["b"] is None and drops["c"] is None
        assert drops["a"] is not None

    def test_non_covering_reports_witness(self):
        A = natural_action(symmetric_group(4), "n")
        rep = minimal_covering_check(A)
        assert not rep.covered and rep.witness is not None


class TestSignCharacter:
    def test_s4_sign_block(self):
        S4 = symmetric_group(4)
        A = sign_character_action(S4, alternating_group(4), "sgn")
        assert A.degree == 6
        assert A.blocks[-1] == ("sgn", 4, 2)
        for g, img in A.pairs():
            fixes = img[4] == 4
            assert fixes == (perm_sign(g) == 1)

    def test_intro_model_via_sign_blocks(self):
        G = generate([perm_from_cycles(4, [(0, 1)]), perm_from_cycles(4, [(2, 3)])])
        subs = [U for U in subgroups_up_to_conjugacy(G) if U.order == 2]
        A = sign_character_action(G, subs[0], "f0")
        # strip the natural block, keep appending sign blocks
        A = sign_character_action(A, subs[1], "f1")
        A = sign_character_action(A, subs[2], "f2")
        sign_pts = A.points_of({"f0", "f1", "f2"})
        for _, img in A.pairs():
            assert any(img[x] == x for x in sign_pts)

    def test_wrong_index_rejected(self):
        S4 = symmetric_group(4)
        with pytest.raises(ValueError):
            sign_character_action(S4, dihedral_group(4), "sgn")


class TestProducts:
    def test_direct_product_orders(self):
        c2 = natural_action(symmetric_group(2), "a")
        d2 = natural_action(symmetric_group(2), "b")
        A = direct_product_action([c2, d2])
        assert A.group.order == 4 and A.degree == 4

        big = direct_product_action(
            [natural_action(agl1(5), "x"), natural_action(agl1(5), "y")])
        assert big.group.order == 400 and big.degree == 10

        mix = direct_product_action(
            [natural_action(symmetric_group(4), "s"), natural_action(symmetric_group(2), "t")])
        assert mix.group.order == 48

    def test_direct_product_cap(self):
        acts = [natural_action(symmetric_group(4), f"b{i}") for i in range(3)]
        with pytest.raises(CapExceeded):
            direct_product_action(acts, cap=1000)

    def test_fibered_product_orders(self):
        G = agl1(5)
        swap, fix = (1, 0), (0, 1)

        def parity(g):
            return fix if perm_sign(g) == 1 else swap

        fib = fibered_product(G, G, parity, parity)
        assert fib.order == 200
        assert fib.degree == 10

    def test_fibered_trivial_quotient_is_full_product(self):
        G = cyclic_group(4)

        def collapse(g):
            return (0,)

        assert fibered_product(G, G, collapse, collapse).order == 16

    def test_fibered_diagonal(self):
        G = cyclic_group(4)
        ident = lambda g: g
        assert fibered_product(G, G, ident, ident).order == 4

    def test_fibered_rejects_non_homomorphism(self):
        G = cyclic_group(4)
        table = {g: ((0, 1) if i % 3 == 0 else (1, 0))
                 for i, g in enumerate(G.elements)}
        with pytest.raises(ValueError):
            fibered_product(G, G, lambda g: table[g], lambda g: table[g])


class TestWreath:
    def test_product_action_square_symmetries(self):
        W = wreath_product(symmetric_group(2), 2, "product")
        assert W.degree == 4 and W.order == 8

    def test_imprimitive(self):
        W = wreath_product(symmetric_group(3), 2, "imprimitive")
        assert W.degree == 6 and W.order == 72
        assert is_transitive(W)

    def test_s5_wr_s2_product(self):
        W = wreath_product(symmetric_group(5), 2, "product")
        assert W.degree == 25 and W.order == 28800

    def test_cap(self):
        with pytest.raises(CapExceeded):
            wreath_product(symmetric_group(5), 3, "imprimitive", cap=10**4)

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            wreath_product(symmetric_group(2), 2, "regular")


class TestCosetFpf:
    def test_odd_coset_of_a5_has_fpf(self):
        S5 = symmetric_group(5)
        A = natural_action(S5, "n")
        ok, wit = coset_fpf_check(A, alternating_group(5), perm_from_cycles(5, [(0, 1)]))
        assert not ok
        assert perm_sign(wit) == -1
        assert all(wit[x] != x for x in range(5))

    def test_intro_model_full_coset(self):
        G = generate([perm_from_cycles(4, [(0, 1)]), perm_from_cycles(4, [(2, 3)])])
        subs = [U for U in subgroups_up_to_conjugacy(G) if U.order == 2]
        A = union_coset_action(G, [(f"f{i}", U) for i, U in enumerate(subs)])
        ok, wit = coset_fpf_check(A, G, identity(4))
        assert ok and wit is None

    def test_klein_four_in_natural_s4(self):
        S4 = symmetric_group(4)
        V4 = generate([perm_from_cycles(4, [(0, 1), (2, 3)]),
                       perm_from_cycles(4, [(0, 2), (1, 3)])])
        A = natural_action(S4, "n")
        ok, wit = coset_fpf_check(A, V4, identity(4))
        assert not ok
        assert cycle_type(wit) == (2, 2)

    def test_rejects_non_normal(self):
        S4 = symmetric_group(4)
        A = natural_action(S4, "n")
        with pytest.raises(ValueError):
            coset_fpf_check(A, point_stabilizer(S4, 3), identity(4))


class TestAffineAndSemilinear:
    def test_orders(self):
        assert agl1_fp2(3).order == 9 * 8
        assert agammal1(3).order == 9 * 8 * 2
        assert agammal1(3).degree == 9
        assert fp2_translations(3).order == 9

    def test_translations_inside_affine(self):
        assert is_subgroup(agl1_fp2(3), fp2_translations(3))

    def test_frobenius_one_fixed_point(self):
        # affine maps with a != 1 fix exactly one point of the plane
        G = agl1_fp2(3)
        trans = fp2_translations(3).element_set()
        for g in G.elements:
            if g in trans:
                continue
            assert sum(1 for x in range(9) if g[x] == x) == 1


class TestBranchCycleConstraint:
    def test_s5_five_cycle(self):
        S5 = symmetric_group(5)
        sigma = perm_from_cycles(5, [(0, 1, 2, 3, 4)])
        assert branch_cycle_constraint(S5, sigma) == frozenset({1, 2, 3, 4})

    def test_a5_five_cycle_splits(self):
        A5 = alternating_group(5)
        sigma = perm_from_cycles(5, [(0, 1, 2, 3, 4)])
        assert branch_cycle_constraint(A5, sigma) == frozenset({1, 4})

    def test_regular_c4(self):
        C4 = cyclic_group(4)
        gen = tuple((i + 1) % 4 for i in range(4))
        assert branch_cycle_constraint(C4, gen) == frozenset({1})

    def test_rejects_foreign_element(self):
        with pytest.raises(ValueError):
            branch_cycle_constraint(alternating_group(4),
                                    perm_from_cycles(4, [(0, 1)]))


class TestCompositionClosure:
    def test_intro_model_squared_still_covers(self):
        # pairwise intersections model the composed action on coset pairs;
        # covering survives composition
        G = generate([perm_from_cycles(4, [(0, 1)]), perm_from_cycles(4, [(2, 3)])])
        subs = [U for U in subgroups_up_to_conjugacy(G) if U.order == 2]
        labeled = []
        for i, U in enumerate(subs):
            for j, V in enumerate(subs):
                labeled.append((f"i{i}{j}", intersect_subgroups(G, U, V)))
        A = union_coset_action(G, labeled)
        assert fixed_point_free_elements(A, first_only=True) == []


class TestWreathLemmaSmoke:
    def test_s3_families_hold(self):
        out = oracles.check_wreath_lemma(symmetric_group(3))
        assert out["families"] == 10
        assert out["counterexamples"] == []

    def test_d4_families_hold(self):
        out = oracles.check_wreath_lemma(dihedral_group(4))
        assert out["families"] == 36
        assert out["counterexamples"] == []
