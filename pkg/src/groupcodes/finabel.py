"""Finite abelian groups presented as products of cyclic factors.

A group is a tuple of factor orders; an element is a coordinate vector of
residues.  A subgroup is stored as the canonical Hermite basis of the
integer lattice of all its coordinate representatives, which by
construction contains the relation lattice spanned by ``orders[j] * e_j``.
Two subgroups are equal exactly when their canonical bases are equal, so
every subgroup identity in the engine reduces to matrix equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, SchemaMismatch
from .intlinalg import (
    IntMatrix,
    echelon_lattice,
    kernel_basis,
    lattice_member,
    snf,
)

DEFAULT_ENUM_CAP = 10**5


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Direct product of cyclic groups ``Z/orders[0] + ... + Z/orders[n-1]``."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(o, int) and o >= 1 for o in self.orders):
            raise ValueError("factor orders must be positive integers")

    @property
    def n(self) -> int:
        return len(self.orders)

    def order(self) -> int:
        return prod(self.orders)

    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    def zero(self) -> GroupElement:
        return GroupElement(self, (0,) * self.n)

    def element(self, coords: Sequence[int]) -> GroupElement:
        return GroupElement(self, tuple(coords))

    def generators(self) -> list[GroupElement]:
        """The standard generating set: one unit vector per nontrivial factor."""
        out = []
        for j, o in enumerate(self.orders):
            if o > 1:
                coords = [0] * self.n
                coords[j] = 1
                out.append(self.element(coords))
        return out

    def elements(self, cap: int = DEFAULT_ENUM_CAP) -> Iterator[GroupElement]:
        if self.order() > cap:
            raise CapExceeded(self.order(), cap)
        for coords in itertools.product(*(range(o) for o in self.orders)):
            yield GroupElement(self, coords)

    def concat(self, other: FiniteAbelianGroup) -> FiniteAbelianGroup:
        return FiniteAbelianGroup(self.orders + other.orders)

    def __repr__(self) -> str:
        if not self.orders:
            return "Group()"
        return "Group(" + "x".join(f"Z{o}" for o in self.orders) + ")"


def direct_sum(groups: Iterable[FiniteAbelianGroup]) -> FiniteAbelianGroup:
    orders: tuple[int, ...] = ()
    for g in groups:
        orders = orders + g.orders
    return FiniteAbelianGroup(orders)


@dataclass(frozen=True)
class GroupElement:
    parent: FiniteAbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != self.parent.n:
            raise SchemaMismatch("coordinate count does not match group rank")
        canon = tuple(int(c) % o for c, o in zip(self.coords, self.parent.orders))
        object.__setattr__(self, "coords", canon)

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.parent, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return GroupElement(self.parent, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> GroupElement:
        return GroupElement(self.parent, tuple(-c for c in self.coords))

    def scale(self, k: int) -> GroupElement:
        return GroupElement(self.parent, tuple(k * c for c in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def order(self) -> int:
        return lcm(*(o // gcd(c, o) for c, o in zip(self.coords, self.parent.orders))) if self.coords else 1

    def _check(self, other: GroupElement) -> None:
        if self.parent != other.parent:
            raise SchemaMismatch("elements of different groups")


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``parent`` as the canonical lattice of its representatives.

    Any generator matrix may be passed as ``basis``; construction stacks the
    relation rows on top and rewrites to the canonical Hermite form, so
    structurally equal Subgroup values denote the same subgroup and
    conversely.
    """

    parent: FiniteAbelianGroup
    basis: IntMatrix

    def __post_init__(self) -> None:
        if self.basis.cols != self.parent.n:
            raise SchemaMismatch("basis width does not match group rank")
        relations = IntMatrix.diagonal(list(self.parent.orders))
        canon = echelon_lattice(self.basis.vstack(relations))
        object.__setattr__(self, "basis", canon)

    def order(self) -> int:
        pivots = prod(self.basis[i, i] for i in range(self.basis.rows))
        return self.parent.order() // pivots

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order()} of {self.parent!r})"


def span(parent: FiniteAbelianGroup, gens: Iterable[GroupElement]) -> Subgroup:
    rows = []
    for g in gens:
        if g.parent != parent:
            raise SchemaMismatch("generator outside the ambient group")
        rows.append(list(g.coords))
    return Subgroup(parent, IntMatrix.from_rows(rows, cols=parent.n))


def trivial(parent: FiniteAbelianGroup) -> Subgroup:
    return span(parent, [])


def full(parent: FiniteAbelianGroup) -> Subgroup:
    return Subgroup(parent, IntMatrix.identity(parent.n))


def member(s: Subgroup, x: GroupElement) -> bool:
    if x.parent != s.parent:
        raise SchemaMismatch("element outside the ambient group")
    return lattice_member(s.basis, x.coords)


def subgroup_sum(a: Subgroup, b: Subgroup) -> Subgroup:
    _same_parent(a, b)
    return Subgroup(a.parent, a.basis.vstack(b.basis))


def subgroup_intersect(a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection via the left kernel of the stacked basis matrices.

    A vector lies in both lattices exactly when it can be written as
    ``u @ basis_a`` and ``v @ basis_b``; the pairs ``(u, v)`` with
    ``u @ basis_a - v @ basis_b == 0`` form the left kernel of the stack.
    """
    _same_parent(a, b)
    stacked = a.basis.vstack(-b.basis)
    left_kernel = kernel_basis(stacked.transpose())
    rows = []
    for i in range(left_kernel.rows):
        coeff = left_kernel.row(i)[: a.basis.rows]
        vec = [0] * a.parent.n
        for k, c in enumerate(coeff):
            if c:
                row = a.basis.row(k)
                for j in range(a.parent.n):
                    vec[j] += c * row[j]
        rows.append(vec)
    return Subgroup(a.parent, IntMatrix.from_rows(rows, cols=a.parent.n))


def subgroup_equal(a: Subgroup, b: Subgroup) -> bool:
    _same_parent(a, b)
    return a.basis == b.basis


def subgroup_le(a: Subgroup, b: Subgroup) -> bool:
    """Whether ``a`` is contained in ``b``."""
    _same_parent(a, b)
    return all(lattice_member(b.basis, a.basis.row(i)) for i in range(a.basis.rows))


def _same_parent(a: Subgroup, b: Subgroup) -> None:
    if a.parent != b.parent:
        raise SchemaMismatch("subgroups of different ambient groups")


@dataclass(frozen=True)
class Homomorphism:
    """Group homomorphism given by an integer matrix acting on coordinates.

    ``matrix`` has shape ``(codomain.n, domain.n)`` and acts on column
    vectors.  Well-definedness requires that each domain relation maps into
    the codomain relation lattice, which is checked at construction.
    """

    domain: FiniteAbelianGroup
    codomain: FiniteAbelianGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.codomain.n or self.matrix.cols != self.domain.n:
            raise SchemaMismatch("matrix shape does not match domain and codomain")
        for j, o in enumerate(self.domain.orders):
            col = self.matrix.column(j)
            if any((o * c) % co for c, co in zip(col, self.codomain.orders)):
                raise ValueError("matrix does not define a homomorphism on these groups")

    def apply(self, x: GroupElement) -> GroupElement:
        if x.parent != self.domain:
            raise SchemaMismatch("element outside the domain")
        return self.codomain.element(self.matrix.apply(x.coords))

    @classmethod
    def from_columns(
        cls, domain: FiniteAbelianGroup, codomain: FiniteAbelianGroup, images: Sequence[GroupElement]
    ) -> Homomorphism:
        """Homomorphism sending the j-th unit vector to ``images[j]``."""
        if len(images) != domain.n:
            raise SchemaMismatch("one image per domain coordinate is required")
        rows = [[images[j].coords[i] for j in range(domain.n)] for i in range(codomain.n)]
        return cls(domain, codomain, IntMatrix.from_rows(rows, cols=domain.n))


def image(f: Homomorphism, s: Subgroup) -> Subgroup:
    if s.parent != f.domain:
        raise SchemaMismatch("subgroup outside the domain")
    gens = [f.codomain.element(f.matrix.apply(s.basis.row(i))) for i in range(s.basis.rows)]
    return span(f.codomain, gens)


def preimage(f: Homomorphism, s: Subgroup) -> Subgroup:
    """Full inverse image ``{x : f(x) in s}``.

    Solves ``matrix @ x == basis_s^T @ c`` over the integers and projects the
    solution lattice onto the ``x`` block; domain relations are restored by
    Subgroup canonicalisation.
    """
    if s.parent != f.codomain:
        raise SchemaMismatch("subgroup outside the codomain")
    stacked = f.matrix.hstack(-s.basis.transpose())
    kern = kernel_basis(stacked)
    rows = [list(kern.row(i))[: f.domain.n] for i in range(kern.rows)]
    return Subgroup(f.domain, IntMatrix.from_rows(rows, cols=f.domain.n))


def kernel(f: Homomorphism) -> Subgroup:
    return preimage(f, trivial(f.codomain))


def invariant_factors(s: Subgroup) -> list[int]:
    """Invariant factor decomposition ``d_1 | d_2 | ... | d_r`` with ``d_i >= 2``.

    The subgroup is the quotient of its representative lattice by the
    relation lattice; writing the relations in the lattice basis gives a
    square presentation matrix whose Smith form lists the factors.
    """
    n = s.parent.n
    presentation = []
    for j, o in enumerate(s.parent.orders):
        rel = [0] * n
        rel[j] = o
        coeffs = _echelon_coefficients(s.basis, rel)
        presentation.append(coeffs)
    d = snf(IntMatrix.from_rows(presentation, cols=n)).d
    return [d[i, i] for i in range(min(d.rows, d.cols)) if d[i, i] > 1]


def _echelon_coefficients(basis: IntMatrix, vec: Sequence[int]) -> list[int]:
    v = list(vec)
    coeffs = []
    for i in range(basis.rows):
        row = basis.row(i)
        p = next(j for j, x in enumerate(row) if x)
        if v[p] % row[p]:
            raise ValueError("vector outside the lattice")
        q = v[p] // row[p]
        coeffs.append(q)
        if q:
            for k in range(p, basis.cols):
                v[k] -= q * row[k]
    if any(v):
        raise ValueError("vector outside the lattice")
    return coeffs


def enumerate_subgroup(s: Subgroup, cap: int = DEFAULT_ENUM_CAP) -> list[GroupElement]:
    """All elements of the subgroup, raising CapExceeded past the cap.

    With the canonical basis the map from coefficient boxes
    ``prod(range(orders[j] // basis[j][j]))`` to elements is a bijection, so
    the enumeration is duplicate-free by construction.
    """
    size = s.order()
    if size > cap:
        raise CapExceeded(size, cap)
    n = s.parent.n
    ranges = [range(s.parent.orders[j] // s.basis[j, j]) for j in range(n)]
    out = []
    for combo in itertools.product(*ranges):
        vec = [0] * n
        for j, c in enumerate(combo):
            if c:
                row = s.basis.row(j)
                for k in range(n):
                    vec[k] += c * row[k]
        out.append(s.parent.element(vec))
    return out


__all__ = [
    "DEFAULT_ENUM_CAP",
    "FiniteAbelianGroup",
    "GroupElement",
    "Subgroup",
    "Homomorphism",
    "direct_sum",
    "span",
    "trivial",
    "full",
    "member",
    "subgroup_sum",
    "subgroup_intersect",
    "subgroup_equal",
    "subgroup_le",
    "image",
    "preimage",
    "kernel",
    "invariant_factors",
    "enumerate_subgroup",
]
