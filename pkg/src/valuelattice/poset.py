"""Finite partially ordered sets over context-labelled elements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import CycleError, SizeExceeded, UnknownElement

DEFAULT_MAX_CARRIER = 4096

Label = Union[str, frozenset, tuple]


@dataclass(frozen=True)
class ElementId:
    """An element of a dimension.

    ``label`` is a plain symbol for base elements, a ``frozenset`` of
    ElementIds for power-set members and a ``tuple`` of ElementIds for
    product members. ``context`` records the path through disjoint unions
    (and, once placed in an LRV, the owning dimension), so equal labels in
    different contexts stay distinct.
    """

    label: Label
    context: tuple[str, ...] = ()

    def with_prefix(self, *tags: str) -> ElementId:
        return ElementId(self.label, tuple(tags) + self.context)

    @property
    def name(self) -> str:
        """Fully qualified name: context path and label joined by dots."""
        return ".".join(self.context + (render_label(self.label),))

    def plain(self):
        """The label with every context stripped, recursively."""
        return plain_label(self.label)

    def __str__(self) -> str:
        return self.name


def render_label(label: Label) -> str:
    if isinstance(label, frozenset):
        return "{" + ", ".join(sorted(e.name for e in label)) + "}"
    if isinstance(label, tuple):
        return "(" + ", ".join(e.name for e in label) + ")"
    return str(label)


def plain_label(label: Label):
    if isinstance(label, frozenset):
        return frozenset(e.plain() for e in label)
    if isinstance(label, tuple):
        return tuple(e.plain() for e in label)
    return label


def sort_key(e: ElementId) -> tuple:
    return (e.context, render_label(e.label))


def check_size(n: int, max_carrier: int | None) -> None:
    cap = DEFAULT_MAX_CARRIER if max_carrier is None else max_carrier
    if n > cap:
        raise SizeExceeded(f"carrier of {n} elements exceeds the cap of {cap}")


class Poset:
    """An immutable finite poset.

    The order is kept fully closed (reflexive and transitive), so ``leq`` is
    a set lookup. Construct through :func:`build_poset`; the constructor
    itself trusts its input.
    """

    __slots__ = ("_elements", "_index", "_up", "_down", "_pairs")

    def __init__(self, carrier: Iterable[ElementId], leq_pairs: Iterable[tuple[ElementId, ElementId]]):
        self._elements = tuple(sorted(set(carrier), key=sort_key))
        self._index = {e: k for k, e in enumerate(self._elements)}
        up: dict[ElementId, set[ElementId]] = {e: {e} for e in self._elements}
        down: dict[ElementId, set[ElementId]] = {e: {e} for e in self._elements}
        for a, b in leq_pairs:
            up[a].add(b)
            down[b].add(a)
        self._up = {e: frozenset(s) for e, s in up.items()}
        self._down = {e: frozenset(s) for e, s in down.items()}
        self._pairs: frozenset | None = None

    # -- basic protocol ---------------------------------------------------

    @property
    def elements(self) -> tuple[ElementId, ...]:
        """Carrier in deterministic (context, label) order."""
        return self._elements

    @property
    def carrier(self) -> frozenset[ElementId]:
        return frozenset(self._elements)

    @property
    def pairs(self) -> frozenset[tuple[ElementId, ElementId]]:
        """The closed order as a set of ``(a, b)`` pairs with ``a <= b``."""
        if self._pairs is None:
            self._pairs = frozenset((a, b) for a in self._elements for b in self._up[a])
        return self._pairs

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self._elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._up == other._up

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        covers = ", ".join(f"{a}<{b}" for a, b in self.hasse())
        return f"Poset({len(self)} elements; {covers or 'antichain'})"

    def _check(self, *xs: ElementId) -> None:
        for x in xs:
            if x not in self._index:
                raise UnknownElement(f"{x!s} is not in the carrier")

    # -- queries ----------------------------------------------------------

    def leq(self, a: ElementId, b: ElementId) -> bool:
        self._check(a, b)
        return b in self._up[a]

    def lt(self, a: ElementId, b: ElementId) -> bool:
        return a != b and self.leq(a, b)

    def up_set(self, x: ElementId) -> frozenset[ElementId]:
        self._check(x)
        return self._up[x]

    def down_set(self, x: ElementId) -> frozenset[ElementId]:
        self._check(x)
        return self._down[x]

    def strict_down_set(self, x: ElementId) -> frozenset[ElementId]:
        """All ``y`` with ``y < x``."""
        self._check(x)
        return self._down[x] - {x}

    def comparable(self, a: ElementId, b: ElementId) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def join(self, a: ElementId, b: ElementId) -> ElementId | None:
        """Least upper bound of ``a`` and ``b``, or ``None`` when there is none.

        ``None`` covers both "no upper bound" and "several minimal upper
        bounds"; a missing supremum is an answer, not a fault.
        """
        self._check(a, b)
        if b in self._up[a]:
            return b
        if a in self._up[b]:
            return a
        bounds = self._up[a] & self._up[b]
        least = [u for u in bounds if bounds <= self._up[u]]
        return least[0] if len(least) == 1 else None

    def is_total(self) -> bool:
        return all(
            self.comparable(a, b)
            for i, a in enumerate(self._elements)
            for b in self._elements[i + 1:]
        )

    def is_join_semilattice(self) -> bool:
        return all(
            self.join(a, b) is not None
            for i, a in enumerate(self._elements)
            for b in self._elements[i + 1:]
        )

    def minimal(self) -> tuple[ElementId, ...]:
        return tuple(e for e in self._elements if len(self._down[e]) == 1)

    def maximal(self) -> tuple[ElementId, ...]:
        return tuple(e for e in self._elements if len(self._up[e]) == 1)

    def hasse(self) -> tuple[tuple[ElementId, ElementId], ...]:
        """Covering pairs ``(a, b)``: ``a < b`` with nothing strictly between."""
        covers = []
        for a in self._elements:
            above = self._up[a] - {a}
            for b in above:
                if len(self._down[b] & above) == 1:
                    covers.append((a, b))
        covers.sort(key=lambda ab: (sort_key(ab[0]), sort_key(ab[1])))
        return tuple(covers)


def build_poset(
    elements: Iterable[ElementId],
    relation: Iterable[tuple[ElementId, ElementId]] = (),
    *,
    max_carrier: int | None = None,
) -> Poset:
    """Close ``relation`` reflexively and transitively over ``elements``.

    Raises CycleError when the closure identifies two distinct elements and
    UnknownElement when a pair leaves the carrier.
    """
    carrier = list(dict.fromkeys(elements))
    if not carrier:
        raise ValueError("a poset needs at least one element")
    check_size(len(carrier), max_carrier)
    known = set(carrier)
    succ: dict[ElementId, set[ElementId]] = {e: set() for e in carrier}
    for a, b in relation:
        for x in (a, b):
            if x not in known:
                raise UnknownElement(f"{x!s} is not in the carrier")
        if a != b:
            succ[a].add(b)

    reach: dict[ElementId, set[ElementId]] = {}
    for start in carrier:
        seen = {start}
        stack = [start]
        while stack:
            for nxt in succ[stack.pop()]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        reach[start] = seen

    for a in carrier:
        for b in reach[a]:
            if b != a and a in reach[b]:
                raise CycleError(f"{a!s} and {b!s} lie on a cycle")
    return Poset(carrier, ((a, b) for a in carrier for b in reach[a]))


def symbols(*labels: str) -> tuple[ElementId, ...]:
    """Context-free elements for quick construction: ``a, b = symbols("a", "b")``."""
    return tuple(ElementId(x) for x in labels)


def chain(*labels: str) -> Poset:
    es = symbols(*labels)
    return build_poset(es, zip(es, es[1:]))


def antichain(*labels: str) -> Poset:
    return build_poset(symbols(*labels))
