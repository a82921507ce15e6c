"""Exact integer matrices with Hermite and Smith normal forms.

Everything runs on Python's arbitrary-precision integers, so coefficient
growth during the reductions is exact and silent overflow cannot occur.
Matrices are immutable; all operations return new values.

Conventions:
  * hnf is row-style: ``u @ m == h`` with ``u`` unimodular, ``h`` in row
    echelon form, pivots positive, entries above a pivot reduced into
    ``[0, pivot)``, zero rows collected at the bottom.
  * snf satisfies ``l @ m @ r == d`` with ``d`` diagonal, entries
    non-negative, and each diagonal entry dividing the next.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        if not all(isinstance(e, int) for e in self.entries):
            raise ValueError("entries must be integers")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            width = len(rows[0])
            if cols is not None and cols != width:
                raise ValueError("explicit column count disagrees with row data")
        else:
            if cols is None:
                raise ValueError("column count required for an empty row list")
            width = cols
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), width, flat)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag: Sequence[int]) -> IntMatrix:
        n = len(diag)
        return cls(n, n, tuple(diag[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError("matrix index out of range")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        flat = tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        return IntMatrix(self.cols, self.rows, flat)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        a, b = self.to_rows(), other.to_rows()
        out = []
        for i in range(self.rows):
            ai = a[i]
            out.append([sum(ai[k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)])
        return IntMatrix.from_rows(out, cols=other.cols)

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    def apply(self, vec: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(self.row(i)[k] * vec[k] for k in range(self.cols)) for i in range(self.rows))

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def hstack(self, other: IntMatrix) -> IntMatrix:
        if self.rows != other.rows:
            raise ValueError("row counts differ")
        rows = [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)]
        return IntMatrix.from_rows(rows, cols=self.cols + other.cols)

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)


@dataclass(frozen=True)
class HnfResult:
    h: IntMatrix
    u: IntMatrix


@dataclass(frozen=True)
class SnfResult:
    d: IntMatrix
    l: IntMatrix
    r: IntMatrix


def hnf(m: IntMatrix) -> HnfResult:
    """Row Hermite normal form with its unimodular transform.

    Returns ``HnfResult(h, u)`` with ``u @ m == h``, ``abs(det(u)) == 1``.
    The result shape equals the input shape; zero rows sink to the bottom.
    """
    a = m.to_rows()
    u = IntMatrix.identity(m.rows).to_rows()
    piv = 0
    for col in range(m.cols):
        if piv >= m.rows:
            break
        # Reduce the column below piv to a single entry by gcd elimination.
        while True:
            live = [i for i in range(piv, m.rows) if a[i][col] != 0]
            if not live:
                break
            pick = min(live, key=lambda i: abs(a[i][col]))
            if pick != piv:
                a[piv], a[pick] = a[pick], a[piv]
                u[piv], u[pick] = u[pick], u[piv]
            if len(live) == 1:
                break
            p = a[piv][col]
            for i in range(piv + 1, m.rows):
                if a[i][col]:
                    q = a[i][col] // p
                    if q:
                        _row_sub(a, i, piv, q)
                        _row_sub(u, i, piv, q)
        if a[piv][col] == 0:
            continue
        if a[piv][col] < 0:
            a[piv] = [-x for x in a[piv]]
            u[piv] = [-x for x in u[piv]]
        p = a[piv][col]
        for i in range(piv):
            q = a[i][col] // p
            if q:
                _row_sub(a, i, piv, q)
                _row_sub(u, i, piv, q)
        piv += 1
    return HnfResult(IntMatrix.from_rows(a, cols=m.cols), IntMatrix.from_rows(u, cols=m.rows))


def _row_sub(rows: list[list[int]], i: int, j: int, q: int) -> None:
    rj = rows[j]
    ri = rows[i]
    for k in range(len(ri)):
        ri[k] -= q * rj[k]


def snf(m: IntMatrix) -> SnfResult:
    """Smith normal form with both unimodular transforms.

    Returns ``SnfResult(d, l, r)`` with ``l @ m @ r == d``, ``d`` diagonal,
    non-negative, and ``d[i][i]`` dividing ``d[i+1][i+1]``.
    """
    a = m.to_rows()
    nr, nc = m.rows, m.cols
    l = IntMatrix.identity(nr).to_rows()
    r = IntMatrix.identity(nc).to_rows()
    t = 0
    while t < nr and t < nc:
        pivot_pos = _min_nonzero(a, t, nr, nc)
        if pivot_pos is None:
            break
        while True:
            i0, j0 = _min_nonzero(a, t, nr, nc)  # type: ignore[misc]
            if i0 != t:
                a[t], a[i0] = a[i0], a[t]
                l[t], l[i0] = l[i0], l[t]
            if j0 != t:
                _col_swap(a, t, j0)
                _col_swap(r, t, j0)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    q = a[i][t] // p
                    if q:
                        _row_sub(a, i, t, q)
                        _row_sub(l, i, t, q)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    q = a[t][j] // p
                    if q:
                        _col_sub(a, j, t, q)
                        _col_sub(r, j, t, q)
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # Row and column are clear; force the divisibility condition.
            p = a[t][t]
            offender = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _row_add(a, t, offender)
            _row_add(l, t, offender)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            l[t] = [-x for x in l[t]]
        t += 1
    return SnfResult(
        IntMatrix.from_rows(a, cols=nc),
        IntMatrix.from_rows(l, cols=nr),
        IntMatrix.from_rows(r, cols=nc),
    )


def _min_nonzero(a: list[list[int]], t: int, nr: int, nc: int) -> tuple[int, int] | None:
    best = None
    for i in range(t, nr):
        for j in range(t, nc):
            v = abs(a[i][j])
            if v and (best is None or v < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def _col_swap(rows: list[list[int]], j0: int, j1: int) -> None:
    for row in rows:
        row[j0], row[j1] = row[j1], row[j0]


def _col_sub(rows: list[list[int]], j: int, j0: int, q: int) -> None:
    for row in rows:
        row[j] -= q * row[j0]


def _row_add(rows: list[list[int]], i: int, j: int) -> None:
    ri, rj = rows[i], rows[j]
    for k in range(len(ri)):
        ri[k] += rj[k]


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise ValueError("determinant needs a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_rows()
    sign = 1
    denom = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // denom
            a[i][k] = 0
        denom = a[k][k]
    return sign * a[n - 1][n - 1]


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Generator rows for the right integer kernel ``{x : m @ x == 0}``.

    Computed from the row HNF of the transpose: rows of the transform that
    map onto zero rows of the echelon form span the kernel lattice.
    """
    res = hnf(m.transpose())
    rows = [list(res.u.row(i)) for i in range(res.h.rows) if all(x == 0 for x in res.h.row(i))]
    return IntMatrix.from_rows(rows, cols=m.cols)


def kernel_mod(a: IntMatrix, moduli: Sequence[int]) -> IntMatrix:
    """Generator rows of the lattice ``{x : a @ x == 0 (mod moduli)}``.

    ``moduli[i]`` applies to row ``i`` of ``a``; every modulus must be
    positive.  The result is in canonical row HNF with zero rows dropped.
    The lattice always contains ``lcm(moduli) * e_j`` for each coordinate,
    so it has full rank.
    """
    if len(moduli) != a.rows:
        raise ValueError("one modulus per matrix row is required")
    if any(mod < 1 for mod in moduli):
        raise ValueError("moduli must be positive")
    if a.rows == 0:
        return IntMatrix.identity(a.cols)
    stacked = a.hstack(IntMatrix.diagonal([-mod for mod in moduli]))
    full = kernel_basis(stacked)
    projected = IntMatrix.from_rows([list(full.row(i))[: a.cols] for i in range(full.rows)], cols=a.cols)
    return echelon_lattice(projected)


def echelon_lattice(m: IntMatrix) -> IntMatrix:
    """Canonical HNF basis of the lattice generated by the rows, zero rows dropped."""
    h = hnf(m).h
    rows = [list(h.row(i)) for i in range(h.rows) if any(h.row(i))]
    return IntMatrix.from_rows(rows, cols=m.cols)


def lattice_member(basis: IntMatrix, vec: Sequence[int]) -> bool:
    """Membership of an integer vector in the row lattice of an echelon basis."""
    coeffs = lattice_coefficients(basis, vec)
    return coeffs is not None


def lattice_coefficients(basis: IntMatrix, vec: Sequence[int]) -> tuple[int, ...] | None:
    """Express ``vec`` as an integer combination of echelon basis rows.

    ``basis`` must be in row echelon form (as produced by echelon_lattice).
    Returns the coefficient vector, or None when ``vec`` is outside the lattice.
    """
    if len(vec) != basis.cols:
        raise ValueError("vector length does not match lattice dimension")
    v = list(vec)
    coeffs = []
    for i in range(basis.rows):
        row = basis.row(i)
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            coeffs.append(0)
            continue
        if v[p] % row[p]:
            return None
        q = v[p] // row[p]
        coeffs.append(q)
        if q:
            for k in range(p, basis.cols):
                v[k] -= q * row[k]
    if any(v):
        return None
    return tuple(coeffs)


def lattice_reduce(basis: IntMatrix, vec: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of ``vec`` modulo the row lattice of ``basis``."""
    if len(vec) != basis.cols:
        raise ValueError("vector length does not match lattice dimension")
    v = list(vec)
    for i in range(basis.rows):
        row = basis.row(i)
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            continue
        q = v[p] // row[p]
        if q:
            for k in range(p, basis.cols):
                v[k] -= q * row[k]
    return tuple(v)


def solve_integer(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """Some integer solution of ``a @ x == b``, or None when there is none."""
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match row count")
    res = hnf(a.transpose())
    coeffs = lattice_coefficients(res.h, b)
    if coeffs is None:
        return None
    x = [0] * a.cols
    for i, c in enumerate(coeffs):
        if c:
            row = res.u.row(i)
            for k in range(a.cols):
                x[k] += c * row[k]
    return tuple(x)


def solve_mod(a: IntMatrix, b: Sequence[int], moduli: Sequence[int]) -> tuple[int, ...] | None:
    """Some x with ``a @ x == b (mod moduli)``, reduced against the solution lattice.

    Returns None when the congruence system is unsolvable.
    """
    if len(moduli) != a.rows:
        raise ValueError("one modulus per matrix row is required")
    if any(mod < 1 for mod in moduli):
        raise ValueError("moduli must be positive")
    stacked = a.hstack(IntMatrix.diagonal([-mod for mod in moduli]))
    sol = solve_integer(stacked, b)
    if sol is None:
        return None
    x = sol[: a.cols]
    return lattice_reduce(kernel_mod(a, moduli), x)


__all__ = [
    "IntMatrix",
    "HnfResult",
    "SnfResult",
    "hnf",
    "snf",
    "det",
    "kernel_basis",
    "kernel_mod",
    "echelon_lattice",
    "lattice_member",
    "lattice_coefficients",
    "lattice_reduce",
    "solve_integer",
    "solve_mod",
    "gcd",
]
