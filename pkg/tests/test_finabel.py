"""Finite abelian groups as lattices: spans, maps, invariants."""

import itertools
import random

import pytest

from groupcodes.errors import CapExceeded, SchemaMismatch
from groupcodes.finabel import (
    FiniteAbelianGroup,
    Homomorphism,
    direct_sum,
    enumerate_subgroup,
    full,
    image,
    invariant_factors,
    kernel,
    member,
    preimage,
    span,
    subgroup_equal,
    subgroup_intersect,
    subgroup_le,
    subgroup_sum,
    trivial,
)


def closure(group, gens):
    """Independent additive closure by breadth-first search on coordinate tuples."""
    seen = {group.zero().coords}
    queue = [group.zero().coords]
    gen_coords = [g.coords for g in gens]
    while queue:
        x = queue.pop()
        for g in gen_coords:
            y = tuple((a + b) % o for a, b, o in zip(x, g, group.orders))
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def random_group(rng, max_n=3, pool=(2, 3, 4)):
    return FiniteAbelianGroup(tuple(rng.choice(pool) for _ in range(rng.randrange(1, max_n + 1))))


def random_elements(rng, group, count):
    return [
        group.element(tuple(rng.randrange(o) for o in group.orders)) for _ in range(count)
    ]


class TestGroupBasics:
    def test_order_exponent(self):
        g = FiniteAbelianGroup((2, 3, 4))
        assert g.order() == 24
        assert g.exponent() == 12

    def test_element_canonicalizes_mod_orders(self):
        g = FiniteAbelianGroup((2, 5))
        assert g.element((3, -1)).coords == (1, 4)

    def test_arithmetic(self):
        g = FiniteAbelianGroup((4,))
        a = g.element((3,))
        assert (a + a).coords == (2,)
        assert (-a).coords == (1,)
        assert a.scale(5).coords == (3,)
        assert a.order() == 4

    def test_generators_skip_trivial_factors(self):
        g = FiniteAbelianGroup((1, 3, 1))
        gens = g.generators()
        assert [x.coords for x in gens] == [(0, 1, 0)]

    def test_elements_cap(self):
        g = FiniteAbelianGroup((100, 100))
        with pytest.raises(CapExceeded):
            list(g.elements(cap=10))

    def test_direct_sum(self):
        g = direct_sum([FiniteAbelianGroup((2,)), FiniteAbelianGroup((3, 4))])
        assert g.orders == (2, 3, 4)

    def test_cross_group_arithmetic_rejected(self):
        a = FiniteAbelianGroup((2,)).element((1,))
        b = FiniteAbelianGroup((3,)).element((1,))
        with pytest.raises(SchemaMismatch):
            a + b


class TestSpanMembership:
    def test_matches_closure_random(self):
        rng = random.Random(31)
        for _ in range(60):
            g = random_group(rng)
            gens = random_elements(rng, g, rng.randrange(0, 3))
            s = span(g, gens)
            expected = closure(g, gens)
            assert s.order() == len(expected)
            for coords in itertools.product(*(range(o) for o in g.orders)):
                assert member(s, g.element(coords)) == (coords in expected)

    def test_canonical_basis_is_presentation_independent(self):
        rng = random.Random(32)
        for _ in range(60):
            g = random_group(rng)
            gens = random_elements(rng, g, 2)
            s1 = span(g, gens)
            doubled = gens + [gens[0] + gens[1], gens[1].scale(3)]
            s2 = span(g, doubled)
            assert s1 == s2
            assert subgroup_equal(s1, s2)

    def test_trivial_and_full(self):
        g = FiniteAbelianGroup((2, 3))
        assert trivial(g).order() == 1
        assert full(g).order() == 6
        assert subgroup_le(trivial(g), full(g))

    def test_lagrange(self):
        rng = random.Random(33)
        for _ in range(60):
            g = random_group(rng)
            s = span(g, random_elements(rng, g, 2))
            assert g.order() % s.order() == 0


class TestSumIntersect:
    def test_against_set_algebra(self):
        rng = random.Random(34)
        for _ in range(50):
            g = random_group(rng)
            a = span(g, random_elements(rng, g, 2))
            b = span(g, random_elements(rng, g, 2))
            sa = closure(g, [g.element(a.basis.row(i)) for i in range(a.basis.rows)])
            sb = closure(g, [g.element(b.basis.row(i)) for i in range(b.basis.rows)])
            sum_set = closure(g, [g.element(c) for c in (sa | sb)])
            inter_set = sa & sb
            s = subgroup_sum(a, b)
            i = subgroup_intersect(a, b)
            assert s.order() == len(sum_set)
            assert i.order() == len(inter_set)
            for coords in inter_set:
                assert member(i, g.element(coords))

    def test_intersect_is_lower_bound(self):
        g = FiniteAbelianGroup((4, 4))
        a = span(g, [g.element((1, 0))])
        b = span(g, [g.element((1, 2))])
        i = subgroup_intersect(a, b)
        assert subgroup_le(i, a) and subgroup_le(i, b)


class TestHomomorphisms:
    def test_well_definedness_enforced(self):
        dom = FiniteAbelianGroup((2,))
        cod = FiniteAbelianGroup((3,))
        with pytest.raises(ValueError):
            Homomorphism.from_columns(dom, cod, [cod.element((1,))])

    def test_image_preimage_kernel_random(self):
        rng = random.Random(35)
        for _ in range(40):
            dom = random_group(rng, max_n=2)
            cod = random_group(rng, max_n=2)
            cols = []
            for j in range(dom.n):
                # scale a random element until its order divides the
                # generator order, so the assignment extends to a map
                z = cod.element(tuple(rng.randrange(o) for o in cod.orders))
                t = z.order()
                cols.append(z.scale(t // _gcd(t, dom.orders[j])))
            f = Homomorphism.from_columns(dom, cod, cols)
            s = span(dom, random_elements(rng, dom, 2))
            t = span(cod, random_elements(rng, cod, 2))
            dom_elems = [dom.element(c) for c in itertools.product(*(range(o) for o in dom.orders))]
            img_set = {f.apply(x).coords for x in dom_elems if member(s, x)}
            img = image(f, s)
            assert img.order() == len(closure(cod, [cod.element(c) for c in img_set]))
            pre = preimage(f, t)
            for x in dom_elems:
                assert member(pre, x) == member(t, f.apply(x))
            ker = kernel(f)
            for x in dom_elems:
                assert member(ker, x) == f.apply(x).is_zero()


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


class TestInvariantFactors:
    def test_full_cyclic(self):
        g = FiniteAbelianGroup((12,))
        assert invariant_factors(full(g)) == [12]

    def test_full_two_by_two(self):
        g = FiniteAbelianGroup((2, 2))
        assert invariant_factors(full(g)) == [2, 2]

    def test_diagonal_in_klein(self):
        g = FiniteAbelianGroup((2, 2))
        s = span(g, [g.element((1, 1))])
        assert invariant_factors(s) == [2]

    def test_mixed_orders(self):
        g = FiniteAbelianGroup((4, 2))
        s = span(g, [g.element((1, 1))])
        assert invariant_factors(s) == [4]

    def test_trivial(self):
        g = FiniteAbelianGroup((6,))
        assert invariant_factors(trivial(g)) == []

    def test_product_and_divisibility_random(self):
        rng = random.Random(36)
        for _ in range(60):
            g = random_group(rng, pool=(2, 3, 4, 6))
            s = span(g, random_elements(rng, g, 2))
            factors = invariant_factors(s)
            prod = 1
            for d in factors:
                assert d > 1
                prod *= d
            assert prod == s.order()
            for a, b in zip(factors, factors[1:]):
                assert b % a == 0

    def test_element_order_multiset_matches(self):
        rng = random.Random(37)
        for _ in range(30):
            g = random_group(rng)
            s = span(g, random_elements(rng, g, 2))
            factors = invariant_factors(s)
            concrete = sorted(x.order() for x in enumerate_subgroup(s))
            abstract_group = FiniteAbelianGroup(tuple(factors))
            abstract = sorted(x.order() for x in abstract_group.elements())
            assert concrete == abstract


class TestEnumeration:
    def test_no_duplicates_and_complete(self):
        rng = random.Random(38)
        for _ in range(50):
            g = random_group(rng)
            s = span(g, random_elements(rng, g, 2))
            elems = enumerate_subgroup(s)
            coords = [x.coords for x in elems]
            assert len(coords) == len(set(coords)) == s.order()
            for x in elems:
                assert member(s, x)

    def test_cap_enforced(self):
        g = FiniteAbelianGroup((4, 4, 4))
        with pytest.raises(CapExceeded):
            enumerate_subgroup(full(g), cap=10)
