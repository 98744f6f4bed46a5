"""Latent dimensions built from specification expressions, and LRVs.

A specification expression describes how a dimension is assembled from
base sets: power sets ordered by inclusion, products ordered componentwise,
disjoint unions that keep equal labels apart through a context path,
label-merging unions, and antichains of named atoms.
"""

from __future__ import annotations

import itertools
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Union

from .errors import (
    AmbiguousValue,
    DuplicateIndex,
    LabelCollision,
    UnknownElement,
    UnknownIndex,
    ValueNotInDimension,
)
from .poset import ElementId, Poset, build_poset, check_size


@dataclass(frozen=True)
class Base:
    name: str
    elements: tuple[str, ...]
    order: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if not self.elements:
            raise ValueError("a base set needs at least one element")
        object.__setattr__(self, "elements", tuple(dict.fromkeys(self.elements)))
        object.__setattr__(self, "order", tuple(tuple(p) for p in self.order))


@dataclass(frozen=True)
class Power:
    inner: SpecExpr


@dataclass(frozen=True)
class Product:
    factors: tuple[SpecExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("Product needs at least one factor")


@dataclass(frozen=True)
class DisjointUnion:
    parts: tuple[SpecExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("DisjointUnion needs at least one part")


@dataclass(frozen=True)
class UnionAsSets:
    parts: tuple[SpecExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("UnionAsSets needs at least one part")


@dataclass(frozen=True)
class ElementsAsAtoms:
    """An antichain of opaque atoms.

    Items are plain symbols or named sub-specifications; a sub-specification
    contributes a single atom carrying its name and nothing of its inner
    structure.
    """

    parts: tuple[Union[str, "SpecExpr"], ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("ElementsAsAtoms needs at least one item")


SpecExpr = Union[Base, Power, Product, DisjointUnion, UnionAsSets, ElementsAsAtoms]


def base(name: str, *elements: str, order: Sequence[tuple[str, str]] = ()) -> Base:
    return Base(name, tuple(elements), tuple(order))


def spec_size(e: SpecExpr) -> int:
    """Carrier size of ``eval_spec(e)`` without building it."""
    if isinstance(e, Base):
        return len(e.elements)
    if isinstance(e, Power):
        n = spec_size(e.inner)
        # clamped: anything this large is rejected by the cap anyway
        return 2 ** min(n, 4096)
    if isinstance(e, Product):
        return math.prod(spec_size(f) for f in e.factors)
    if isinstance(e, (DisjointUnion, UnionAsSets)):
        return sum(spec_size(p) for p in e.parts)
    if isinstance(e, ElementsAsAtoms):
        return len(e.parts)
    raise TypeError(f"not a specification expression: {e!r}")


def atom_name(item: Union[str, SpecExpr]) -> str:
    if isinstance(item, str):
        return item
    if isinstance(item, Base) and item.name:
        return item.name
    raise ValueError(f"atom item {item!r} has no name")


def eval_spec(e: SpecExpr, *, max_carrier: int | None = None) -> Poset:
    """Materialise the poset described by ``e``."""
    check_size(spec_size(e), max_carrier)
    return _eval(e, max_carrier)


def _eval(e: SpecExpr, cap: int | None) -> Poset:
    if isinstance(e, Base):
        es = {x: ElementId(x) for x in e.elements}
        missing = [x for pair in e.order for x in pair if x not in es]
        if missing:
            raise UnknownElement(f"order mentions {missing[0]!r}, not an element of {e.name or 'base'}")
        return build_poset(es.values(), ((es[a], es[b]) for a, b in e.order), max_carrier=cap)

    if isinstance(e, Power):
        inner = _eval(e.inner, cap).elements
        n = len(inner)
        full = (1 << n) - 1
        subsets = [
            ElementId(frozenset(inner[k] for k in range(n) if mask >> k & 1))
            for mask in range(full + 1)
        ]
        pairs = []
        for a in range(full + 1):
            rest = full & ~a
            sub = rest
            while True:
                pairs.append((subsets[a], subsets[a | sub]))
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        return Poset(subsets, pairs)

    if isinstance(e, Product):
        factors = [_eval(f, cap) for f in e.factors]
        carrier = [ElementId(t) for t in itertools.product(*(f.elements for f in factors))]
        pairs = [
            (ElementId(tuple(a for a, _ in combo)), ElementId(tuple(b for _, b in combo)))
            for combo in itertools.product(*(f.pairs for f in factors))
        ]
        return Poset(carrier, pairs)

    if isinstance(e, DisjointUnion):
        carrier, pairs = [], []
        for k, part in enumerate(e.parts):
            tag = str(k)
            p = _eval(part, cap)
            carrier += [x.with_prefix(tag) for x in p.elements]
            pairs += [(a.with_prefix(tag), b.with_prefix(tag)) for a, b in p.pairs]
        return Poset(carrier, pairs)

    if isinstance(e, UnionAsSets):
        carrier: dict[ElementId, int] = {}
        pairs = []
        for k, part in enumerate(e.parts):
            p = _eval(part, cap)
            for x in p.elements:
                if x in carrier:
                    raise LabelCollision(f"{x!s} occurs in union parts {carrier[x]} and {k}")
                carrier[x] = k
            pairs += p.pairs
        return Poset(carrier, pairs)

    if isinstance(e, ElementsAsAtoms):
        names = [atom_name(item) for item in e.parts]
        dupes = {n for n in names if names.count(n) > 1}
        if dupes:
            raise LabelCollision(f"repeated atoms: {', '.join(sorted(dupes))}")
        return build_poset([ElementId(n) for n in names], max_carrier=cap)

    raise TypeError(f"not a specification expression: {e!r}")


@dataclass(frozen=True)
class Dimension:
    id: str
    poset: Poset
    spec: SpecExpr
    _by_plain: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table: dict = {}
        for e in self.poset:
            table.setdefault(e.plain(), []).append(e)
        object.__setattr__(self, "_by_plain", table)

    def __contains__(self, x: object) -> bool:
        return x in self.poset

    def __len__(self) -> int:
        return len(self.poset)

    def find(self, value) -> ElementId:
        """Resolve ``value`` to an element of this dimension.

        ``value`` may already be an ElementId, or a plain label: a string,
        a set of plain labels (power-set members) or a tuple (product
        members). Plain labels must match exactly one element.
        """
        if isinstance(value, ElementId):
            if value not in self.poset:
                raise ValueNotInDimension(f"{value!s} is not an element of {self.id}")
            return value
        if isinstance(value, (set, list)):
            value = frozenset(value)
        matches = self._by_plain.get(value, [])
        if not matches:
            raise ValueNotInDimension(f"{_show(value)} is not an element of {self.id}")
        if len(matches) > 1:
            raise AmbiguousValue(
                f"{_show(value)} matches {len(matches)} elements of {self.id}: "
                + ", ".join(str(m) for m in matches)
            )
        return matches[0]


def _show(value) -> str:
    if isinstance(value, frozenset):
        return "{" + ", ".join(sorted(_show(v) for v in value)) + "}"
    if isinstance(value, tuple):
        return "(" + ", ".join(_show(v) for v in value) + ")"
    return str(value)


@dataclass(frozen=True)
class LRV:
    """A latent representation of value: dimensions keyed by their index."""

    index: tuple[str, ...]
    dims: Mapping[str, Dimension]

    def __getitem__(self, i: str) -> Dimension:
        try:
            return self.dims[i]
        except KeyError:
            raise UnknownIndex(f"no dimension indexed {i!r}") from None

    def __contains__(self, i: object) -> bool:
        return i in self.dims

    def __len__(self) -> int:
        return len(self.index)

    def __hash__(self) -> int:
        return hash(self.index)

    def element(self, i: str, value) -> ElementId:
        return self[i].find(value)

    def poset(self, i: str) -> Poset:
        return self[i].poset


def make_lrv(entries: Sequence[tuple[str, SpecExpr]], *, max_carrier: int | None = None) -> LRV:
    """Build every dimension and tag its elements with the dimension id."""
    dims: dict[str, Dimension] = {}
    for i, spec in entries:
        if i in dims:
            raise DuplicateIndex(f"index {i!r} declared twice")
        raw = eval_spec(spec, max_carrier=max_carrier)
        tagged = Poset(
            (x.with_prefix(i) for x in raw.elements),
            ((a.with_prefix(i), b.with_prefix(i)) for a, b in raw.pairs),
        )
        dims[i] = Dimension(i, tagged, spec)
    return LRV(tuple(dims), dims)


class Representation:
    """The product of the dimensions indexed by ``J``, never materialised.

    Points are tuples ordered like ``J`` or mappings from index to element.
    """

    def __init__(self, lrv: LRV, J: Sequence[str]):
        J = tuple(dict.fromkeys(J))
        if not J:
            raise ValueError("J must be non-empty")
        for j in J:
            lrv[j]
        self.lrv = lrv
        self.J = J

    def __repr__(self) -> str:
        return f"Representation({' x '.join(self.J)})"

    @property
    def size(self) -> int:
        return math.prod(len(self.lrv[j]) for j in self.J)

    def _as_mapping(self, point) -> dict | None:
        if isinstance(point, Mapping):
            return dict(point) if set(point) == set(self.J) else None
        point = tuple(point)
        if len(point) != len(self.J):
            return None
        return dict(zip(self.J, point))

    def __contains__(self, point) -> bool:
        m = self._as_mapping(point)
        return m is not None and all(m[j] in self.lrv[j] for j in self.J)

    def project(self, point, i: str) -> ElementId:
        """The canonical projection onto the factor ``i``."""
        if i not in self.J:
            raise UnknownIndex(f"{i!r} is not a factor of {self!r}")
        if point not in self:
            raise ValueNotInDimension(f"{point!r} is not a point of {self!r}")
        return self._as_mapping(point)[i]


def rho_J(lrv: LRV, J: Sequence[str]) -> Representation:
    return Representation(lrv, J)

