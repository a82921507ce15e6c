"""Exact integer matrix layer: canonical forms, kernels, solvers."""

import itertools
import random

import pytest

from groupcodes.intlinalg import (
    IntMatrix,
    det,
    echelon_lattice,
    hnf,
    kernel_basis,
    kernel_mod,
    lattice_coefficients,
    lattice_member,
    lattice_reduce,
    snf,
    solve_integer,
    solve_mod,
)


def rows(m: IntMatrix) -> list[list[int]]:
    return m.to_rows()


def random_matrix(rng: random.Random, max_dim: int = 5, bound: int = 20) -> IntMatrix:
    r = rng.randrange(1, max_dim + 1)
    c = rng.randrange(1, max_dim + 1)
    return IntMatrix.from_rows(
        [[rng.randrange(-bound, bound + 1) for _ in range(c)] for _ in range(r)], cols=c
    )


class TestHnf:
    def test_two_by_two(self):
        res = hnf(IntMatrix.from_rows([[4, 6], [2, 2]]))
        assert rows(res.h) == [[2, 0], [0, 2]]

    def test_identity_fixed(self):
        m = IntMatrix.identity(3)
        assert rows(hnf(m).h) == rows(m)

    def test_zero_matrix(self):
        m = IntMatrix.zeros(2, 3)
        assert rows(hnf(m).h) == [[0, 0, 0], [0, 0, 0]]

    def test_transform_identity_random(self):
        rng = random.Random(11)
        for _ in range(300):
            m = random_matrix(rng)
            res = hnf(m)
            assert res.u @ m == res.h
            assert abs(det(res.u)) == 1

    def test_pivots_positive_and_reduced(self):
        rng = random.Random(12)
        for _ in range(200):
            m = random_matrix(rng)
            h = hnf(m).h
            last_col = -1
            for i in range(h.rows):
                row = h.row(i)
                nz = [j for j, v in enumerate(row) if v]
                if not nz:
                    continue
                pivot_col = nz[0]
                assert pivot_col > last_col
                last_col = pivot_col
                pivot = row[pivot_col]
                assert pivot > 0
                for above in range(i):
                    assert 0 <= h[above, pivot_col] < pivot

    def test_canonical_for_equal_lattices(self):
        base = IntMatrix.from_rows([[2, 1], [0, 3]])
        shuffled = IntMatrix.from_rows([[2, 4], [2, 1], [0, 3]], cols=2)
        h1 = [r for r in rows(hnf(base).h) if any(r)]
        h2 = [r for r in rows(hnf(shuffled).h) if any(r)]
        assert h1 == h2


class TestSnf:
    def test_diag_2_3(self):
        res = snf(IntMatrix.diagonal([2, 3]))
        assert rows(res.d) == [[1, 0], [0, 6]]

    def test_diag_6_4(self):
        res = snf(IntMatrix.diagonal([6, 4]))
        assert rows(res.d) == [[2, 0], [0, 12]]

    def test_transform_identity_random(self):
        rng = random.Random(13)
        for _ in range(200):
            m = random_matrix(rng)
            res = snf(m)
            assert res.l @ m @ res.r == res.d
            assert abs(det(res.l)) == 1
            assert abs(det(res.r)) == 1

    def test_divisibility_chain(self):
        rng = random.Random(14)
        for _ in range(200):
            m = random_matrix(rng)
            d = snf(m).d
            diag = [d[i, i] for i in range(min(d.rows, d.cols))]
            seen_zero = False
            for a, b in zip(diag, diag[1:]):
                assert a >= 0 and b >= 0
                if a == 0:
                    seen_zero = True
                    assert b == 0
                elif not seen_zero and b:
                    assert b % a == 0
            for i in range(d.rows):
                for j in range(d.cols):
                    if i != j:
                        assert d[i, j] == 0


class TestDet:
    def test_known_values(self):
        assert det(IntMatrix.from_rows([[2, 0], [0, 3]])) == 6
        assert det(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
        assert det(IntMatrix.identity(4)) == 1

    def test_matches_permutation_expansion(self):
        rng = random.Random(15)
        for _ in range(50):
            n = rng.randrange(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)], cols=n
            )
            expected = 0
            for perm in itertools.permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                term = sign
                for i in range(n):
                    term *= m[i, perm[i]]
                expected += term
            assert det(m) == expected

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            det(IntMatrix.zeros(2, 3))


class TestKernels:
    def test_kernel_basis_annihilates(self):
        rng = random.Random(16)
        for _ in range(200):
            m = random_matrix(rng)
            k = kernel_basis(m)
            for i in range(k.rows):
                assert all(v == 0 for v in m.apply(k.row(i)))

    def test_kernel_basis_rank(self):
        m = IntMatrix.from_rows([[1, 2, 3]])
        k = kernel_basis(m)
        assert k.rows == 2

    def test_kernel_mod_frozen(self):
        k = kernel_mod(IntMatrix.from_rows([[2]]), [4])
        assert rows(k) == [[2]]

    def test_kernel_mod_empty_rows(self):
        k = kernel_mod(IntMatrix.zeros(0, 3), [])
        assert rows(k) == rows(IntMatrix.identity(3))

    def test_kernel_mod_matches_enumeration(self):
        rng = random.Random(17)
        for _ in range(40):
            r = rng.randrange(1, 3)
            c = rng.randrange(1, 4)
            moduli = [rng.choice((2, 3, 4)) for _ in range(r)]
            a = IntMatrix.from_rows(
                [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)], cols=c
            )
            k = kernel_mod(a, moduli)
            box = 12
            for x in itertools.product(range(box), repeat=c):
                belongs = all(
                    sum(a[i, j] * x[j] for j in range(c)) % moduli[i] == 0 for i in range(r)
                )
                assert lattice_member(k, list(x)) == belongs

    def test_kernel_mod_contains_lcm_units(self):
        rng = random.Random(18)
        for _ in range(40):
            r = rng.randrange(1, 3)
            c = rng.randrange(1, 4)
            moduli = [rng.choice((2, 3, 4, 6)) for _ in range(r)]
            a = IntMatrix.from_rows(
                [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)], cols=c
            )
            k = kernel_mod(a, moduli)
            l = 1
            for m in moduli:
                l = l * m // _gcd(l, m)
            for j in range(c):
                unit = [0] * c
                unit[j] = l
                assert lattice_member(k, unit)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


class TestLatticeOps:
    def test_echelon_spans_same_lattice(self):
        rng = random.Random(19)
        for _ in range(100):
            m = random_matrix(rng, max_dim=4, bound=6)
            e = echelon_lattice(m)
            for i in range(m.rows):
                assert lattice_member(e, m.row(i))
            for i in range(e.rows):
                # every echelon row is an integer combination of the inputs
                assert solve_integer(m.transpose(), e.row(i)) is not None

    def test_coefficients_reconstruct(self):
        rng = random.Random(20)
        for _ in range(100):
            m = random_matrix(rng, max_dim=4, bound=6)
            e = echelon_lattice(m)
            coeffs = [rng.randrange(-3, 4) for _ in range(e.rows)]
            vec = [0] * e.cols
            for c, i in zip(coeffs, range(e.rows)):
                for j in range(e.cols):
                    vec[j] += c * e[i, j]
            found = lattice_coefficients(e, vec)
            assert found is not None
            rebuilt = [0] * e.cols
            for c, i in zip(found, range(e.rows)):
                for j in range(e.cols):
                    rebuilt[j] += c * e[i, j]
            assert rebuilt == vec

    def test_coefficients_none_outside(self):
        m = IntMatrix.from_rows([[2, 0], [0, 2]])
        assert lattice_coefficients(m, [1, 0]) is None

    def test_reduce_is_canonical_on_cosets(self):
        rng = random.Random(21)
        lat = IntMatrix.from_rows([[2, 1], [0, 3]])
        for _ in range(100):
            x = [rng.randrange(-9, 10), rng.randrange(-9, 10)]
            shift = [rng.randrange(-3, 4), rng.randrange(-3, 4)]
            moved = [
                x[j] + sum(shift[i] * lat[i, j] for i in range(2)) for j in range(2)
            ]
            assert lattice_reduce(lat, x) == lattice_reduce(lat, moved)
            diff = [a - b for a, b in zip(x, lattice_reduce(lat, x))]
            assert lattice_member(lat, diff)


class TestSolvers:
    def test_solve_integer_roundtrip(self):
        rng = random.Random(22)
        for _ in range(200):
            m = random_matrix(rng, max_dim=4, bound=5)
            x = [rng.randrange(-3, 4) for _ in range(m.cols)]
            b = m.apply(x)
            sol = solve_integer(m, b)
            assert sol is not None
            assert tuple(m.apply(sol)) == tuple(b)

    def test_solve_integer_unsolvable(self):
        assert solve_integer(IntMatrix.from_rows([[2]]), [1]) is None

    def test_solve_mod_roundtrip(self):
        rng = random.Random(23)
        for _ in range(120):
            r = rng.randrange(1, 3)
            c = rng.randrange(1, 4)
            moduli = [rng.choice((2, 3, 4, 6)) for _ in range(r)]
            a = IntMatrix.from_rows(
                [[rng.randrange(-4, 5) for _ in range(c)] for _ in range(r)], cols=c
            )
            x = [rng.randrange(-3, 4) for _ in range(c)]
            b = [v % m for v, m in zip(a.apply(x), moduli)]
            sol = solve_mod(a, b, moduli)
            assert sol is not None
            got = a.apply(sol)
            assert all((g - want) % m == 0 for g, want, m in zip(got, b, moduli))

    def test_solve_mod_unsolvable(self):
        a = IntMatrix.from_rows([[2]])
        assert solve_mod(a, [1], [4]) is None
