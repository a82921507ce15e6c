"""Sequences over a product of finite abelian groups, finitely presented.

Coordinates 0..w0-1 may carry individual groups (the prefix); from w0 on
every coordinate carries the shared tail group.  An element stores explicit
values on ``[0, P)`` and an eventually repeating block of length ``L`` that
starts at coordinate ``P``.  Construction rewrites to the canonical form
with minimal block length and minimal prefix length, so equal sequences
have equal representations.

A ProductSubgroup is the subgroup generated by finitely many such
elements.  Every decision about it reduces to a finite abelian instance
over the coordinates of an effective window ``[0, W)`` plus one block of
``L`` tail coordinates, since all generators are determined there.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

from .errors import CapExceeded, SchemaMismatch
from .finabel import (
    DEFAULT_ENUM_CAP,
    FiniteAbelianGroup,
    GroupElement,
    Subgroup,
    enumerate_subgroup,
    member,
    span,
    subgroup_equal,
)
from .intlinalg import IntMatrix, kernel_mod

INFINITE = "infinite"


@dataclass(frozen=True)
class CoordSchema:
    """Coordinate groups: explicit prefix groups, then a constant tail group."""

    prefix: tuple[FiniteAbelianGroup, ...]
    tail: FiniteAbelianGroup

    @property
    def w0(self) -> int:
        return len(self.prefix)

    def group_at(self, i: int) -> FiniteAbelianGroup:
        if i < 0:
            raise IndexError("coordinates are indexed from 0")
        return self.prefix[i] if i < self.w0 else self.tail


def uniform_schema(group: FiniteAbelianGroup) -> CoordSchema:
    """Schema with the same group at every coordinate."""
    return CoordSchema((), group)


@dataclass(frozen=True)
class SeqElement:
    """Eventually periodic sequence; canonical minimal representation."""

    schema: CoordSchema
    prefix_vals: tuple[GroupElement, ...]
    period: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if len(self.period) < 1:
            raise ValueError("period block must be non-empty")
        if len(self.prefix_vals) < self.schema.w0:
            raise SchemaMismatch("prefix values must cover all prefix coordinates")
        for i, v in enumerate(self.prefix_vals):
            if v.parent != self.schema.group_at(i):
                raise SchemaMismatch(f"value at coordinate {i} is in the wrong group")
        for v in self.period:
            if v.parent != self.schema.tail:
                raise SchemaMismatch("period values must lie in the tail group")
        prefix, period = _canonicalize(self.schema, list(self.prefix_vals), list(self.period))
        object.__setattr__(self, "prefix_vals", tuple(prefix))
        object.__setattr__(self, "period", tuple(period))

    @property
    def prefix_len(self) -> int:
        return len(self.prefix_vals)

    @property
    def period_len(self) -> int:
        return len(self.period)

    def value_at(self, i: int) -> GroupElement:
        if i < 0:
            raise IndexError("coordinates are indexed from 0")
        if i < self.prefix_len:
            return self.prefix_vals[i]
        return self.period[(i - self.prefix_len) % self.period_len]

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.prefix_vals) and all(v.is_zero() for v in self.period)

    def __add__(self, other: SeqElement) -> SeqElement:
        if self.schema != other.schema:
            raise SchemaMismatch("elements over different schemas")
        p = max(self.prefix_len, other.prefix_len)
        l = lcm(self.period_len, other.period_len)
        prefix = [self.value_at(i) + other.value_at(i) for i in range(p)]
        period = [self.value_at(p + t) + other.value_at(p + t) for t in range(l)]
        return SeqElement(self.schema, tuple(prefix), tuple(period))

    def __neg__(self) -> SeqElement:
        return SeqElement(self.schema, tuple(-v for v in self.prefix_vals), tuple(-v for v in self.period))

    def __sub__(self, other: SeqElement) -> SeqElement:
        return self + (-other)

    def scale(self, k: int) -> SeqElement:
        return SeqElement(self.schema, tuple(v.scale(k) for v in self.prefix_vals), tuple(v.scale(k) for v in self.period))


def _canonicalize(
    schema: CoordSchema, prefix: list[GroupElement], period: list[GroupElement]
) -> tuple[list[GroupElement], list[GroupElement]]:
    # Minimal block length: the shortest divisor length that tiles the block.
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and all(period[t] == period[t % d] for t in range(n)):
            period = period[:d]
            break
    # Minimal prefix: absorb trailing prefix values into the block, rotating
    # it so that reads at every coordinate are unchanged.
    while len(prefix) > schema.w0 and prefix[-1] == period[-1]:
        prefix.pop()
        period = period[-1:] + period[:-1]
    return prefix, period


def seq_add(a: SeqElement, b: SeqElement) -> SeqElement:
    return a + b


def seq_neg(a: SeqElement) -> SeqElement:
    return -a


def seq_scale(k: int, a: SeqElement) -> SeqElement:
    return a.scale(k)


def zero_element(schema: CoordSchema) -> SeqElement:
    prefix = tuple(schema.group_at(i).zero() for i in range(schema.w0))
    return SeqElement(schema, prefix, (schema.tail.zero(),))


def from_values(
    schema: CoordSchema, values: Sequence[GroupElement], period: Sequence[GroupElement] | None = None
) -> SeqElement:
    """Element with the given explicit values, then the given block (default zero)."""
    prefix = list(values)
    for i in range(len(prefix), schema.w0):
        prefix.append(schema.group_at(i).zero())
    block = tuple(period) if period else (schema.tail.zero(),)
    return SeqElement(schema, tuple(prefix), block)


def delta(schema: CoordSchema, i: int, value: GroupElement) -> SeqElement:
    """Finite-support element equal to ``value`` at coordinate ``i`` and zero elsewhere."""
    if value.parent != schema.group_at(i):
        raise SchemaMismatch("value group does not match the coordinate group")
    prefix = [schema.group_at(j).zero() for j in range(max(i + 1, schema.w0))]
    prefix[i] = value
    return SeqElement(schema, tuple(prefix), (schema.tail.zero(),))


def constant(schema: CoordSchema, value: GroupElement) -> SeqElement:
    """Element equal to ``value`` at every tail coordinate and zero on the prefix."""
    if value.parent != schema.tail:
        raise SchemaMismatch("constant value must lie in the tail group")
    prefix = tuple(schema.group_at(i).zero() for i in range(schema.w0))
    return SeqElement(schema, prefix, (value,))


def support(a: SeqElement) -> frozenset[int] | str:
    """Set of coordinates with nonzero value, or the marker ``INFINITE``."""
    if not all(v.is_zero() for v in a.period):
        return INFINITE
    return frozenset(i for i, v in enumerate(a.prefix_vals) if not v.is_zero())


@dataclass(frozen=True)
class ProductSubgroup:
    """Subgroup generated by finitely many sequence elements."""

    schema: CoordSchema
    gens: tuple[SeqElement, ...]

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.schema != self.schema:
                raise SchemaMismatch("generator over a different schema")


def effective_window(h: ProductSubgroup) -> tuple[int, int]:
    """Window ``(W, L)``: explicit length and block length covering every generator."""
    w = max([h.schema.w0] + [g.prefix_len for g in h.gens])
    l = lcm(*(g.period_len for g in h.gens)) if h.gens else 1
    return w, l


def ambient_group(schema: CoordSchema, coords: Sequence[int]) -> FiniteAbelianGroup:
    orders: tuple[int, ...] = ()
    for i in coords:
        orders = orders + schema.group_at(i).orders
    return FiniteAbelianGroup(orders)


def restrict(e: SeqElement, coords: Sequence[int], ambient: FiniteAbelianGroup | None = None) -> GroupElement:
    """Restriction of an element to the listed coordinates, flattened."""
    if ambient is None:
        ambient = ambient_group(e.schema, coords)
    flat: tuple[int, ...] = ()
    for i in coords:
        flat = flat + e.value_at(i).coords
    return ambient.element(flat)


def project(h: ProductSubgroup, j: Iterable[int]) -> Subgroup:
    """Projection of the subgroup onto the coordinates in ``j`` (sorted)."""
    coords = sorted(set(j))
    if any(i < 0 for i in coords):
        raise IndexError("coordinates are indexed from 0")
    ambient = ambient_group(h.schema, coords)
    return span(ambient, [restrict(g, coords, ambient) for g in h.gens])


def _combination_gens(h: ProductSubgroup, coefficients: IntMatrix) -> tuple[SeqElement, ...]:
    out = []
    for i in range(coefficients.rows):
        acc = zero_element(h.schema)
        for g, c in zip(h.gens, coefficients.row(i)):
            if c:
                acc = acc + g.scale(c)
        if not acc.is_zero():
            out.append(acc)
    return tuple(out)


def intersect_directsum(h: ProductSubgroup) -> ProductSubgroup:
    """The finite-support part: kernel of the map onto the repeating block.

    A combination of generators has finite support exactly when its block
    vanishes, and then its support lies inside ``[0, W)``.
    """
    w, l = effective_window(h)
    if not h.gens:
        return ProductSubgroup(h.schema, ())
    tail_orders = h.schema.tail.orders
    rows = []
    for t in range(l):
        for slot in range(len(tail_orders)):
            rows.append([g.value_at(w + t).coords[slot] for g in h.gens])
    coeffs = kernel_mod(IntMatrix.from_rows(rows, cols=len(h.gens)), list(tail_orders) * l)
    return ProductSubgroup(h.schema, _combination_gens(h, coeffs))


def intersect_sum_window(h: ProductSubgroup, window: Iterable[int]) -> ProductSubgroup:
    """Elements of the subgroup supported inside the finite coordinate set."""
    keep = set(window)
    if any(i < 0 for i in keep):
        raise IndexError("coordinates are indexed from 0")
    w, l = effective_window(h)
    w2 = max(w, max(keep) + 1 if keep else 0)
    if not h.gens:
        return ProductSubgroup(h.schema, ())
    rows: list[list[int]] = []
    moduli: list[int] = []
    for i in range(w2):
        if i in keep:
            continue
        orders = h.schema.group_at(i).orders
        for slot in range(len(orders)):
            rows.append([g.value_at(i).coords[slot] for g in h.gens])
        moduli.extend(orders)
    tail_orders = h.schema.tail.orders
    for t in range(l):
        for slot in range(len(tail_orders)):
            rows.append([g.value_at(w2 + t).coords[slot] for g in h.gens])
        moduli.extend(tail_orders)
    coeffs = kernel_mod(IntMatrix.from_rows(rows, cols=len(h.gens)), moduli)
    return ProductSubgroup(h.schema, _combination_gens(h, coeffs))


@dataclass(frozen=True)
class WindowCodec:
    """Faithful encoding of window-bounded elements into one finite group.

    Elements with prefix length at most ``w`` and block length dividing
    ``l`` are determined by their values on ``[0, w + l)``; the codec
    flattens those values into a single finite abelian group and back.
    """

    schema: CoordSchema
    w: int
    l: int
    ambient: FiniteAbelianGroup

    @classmethod
    def for_window(cls, schema: CoordSchema, w: int, l: int) -> WindowCodec:
        coords = list(range(w + l))
        return cls(schema, w, l, ambient_group(schema, coords))

    def encode(self, e: SeqElement) -> GroupElement:
        if e.prefix_len > self.w or self.l % e.period_len:
            raise SchemaMismatch("element is not bounded by this window")
        return restrict(e, range(self.w + self.l), self.ambient)

    def decode(self, x: GroupElement) -> SeqElement:
        if x.parent != self.ambient:
            raise SchemaMismatch("element outside the window ambient group")
        vals = []
        pos = 0
        for i in range(self.w + self.l):
            g = self.schema.group_at(i)
            vals.append(g.element(x.coords[pos : pos + g.n]))
            pos += g.n
        return SeqElement(self.schema, tuple(vals[: self.w]), tuple(vals[self.w :]))


def window_subgroup(h: ProductSubgroup, upto: int = 0) -> tuple[Subgroup, WindowCodec]:
    """The subgroup as a finite abelian instance over its effective window.

    ``upto`` widens the explicit part so that callers may reason about
    coordinates beyond the generators' own prefixes.
    """
    w, l = effective_window(h)
    w = max(w, upto)
    codec = WindowCodec.for_window(h.schema, w, l)
    return span(codec.ambient, [codec.encode(g) for g in h.gens]), codec


def enumerate_elements(h: ProductSubgroup, cap: int = DEFAULT_ENUM_CAP) -> list[SeqElement]:
    sub, codec = window_subgroup(h)
    return [codec.decode(x) for x in enumerate_subgroup(sub, cap)]


def subgroup_order(h: ProductSubgroup) -> int:
    sub, _ = window_subgroup(h)
    return sub.order()


def contains(h: ProductSubgroup, e: SeqElement) -> bool:
    """Membership of a sequence element in the generated subgroup."""
    w, l = effective_window(h)
    if e.prefix_len > w or l % e.period_len:
        return False
    sub, codec = window_subgroup(h)
    return member(sub, codec.encode(e))


def subgroups_equal(h1: ProductSubgroup, h2: ProductSubgroup) -> bool:
    """Mathematical equality of two generated subgroups over one schema."""
    if h1.schema != h2.schema:
        raise SchemaMismatch("subgroups over different schemas")
    w1, l1 = effective_window(h1)
    w2, l2 = effective_window(h2)
    w, l = max(w1, w2), lcm(l1, l2)
    codec = WindowCodec.for_window(h1.schema, w, l)
    s1 = span(codec.ambient, [codec.encode(g) for g in h1.gens])
    s2 = span(codec.ambient, [codec.encode(g) for g in h2.gens])
    return subgroup_equal(s1, s2)


__all__ = [
    "INFINITE",
    "CoordSchema",
    "SeqElement",
    "ProductSubgroup",
    "WindowCodec",
    "uniform_schema",
    "seq_add",
    "seq_neg",
    "seq_scale",
    "zero_element",
    "from_values",
    "delta",
    "constant",
    "support",
    "effective_window",
    "ambient_group",
    "restrict",
    "project",
    "intersect_directsum",
    "intersect_sum_window",
    "window_subgroup",
    "enumerate_elements",
    "subgroup_order",
    "contains",
    "subgroups_equal",
]
