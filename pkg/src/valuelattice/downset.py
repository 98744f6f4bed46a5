"""The strict down-set embedding and the small-poset enumeration oracle.

``iota`` sends each element to the set of elements strictly below it and
orders the images by inclusion. It always preserves the strict order, but
it turns joins into unions only on chains; the enumeration helpers make
that checkable over every labelled poset of up to five elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import NotAJoinSemilattice, SizeExceeded
from .poset import ElementId, Poset, build_poset

MAX_ENUMERATION = 5


@dataclass(frozen=True)
class IotaResult:
    source: Poset
    image: Poset
    map: Mapping[ElementId, ElementId]

    @property
    def injective(self) -> bool:
        return len(self.image) == len(self.source)


def iota(p: Poset) -> IotaResult:
    downs = {x: ElementId(p.strict_down_set(x)) for x in p}
    carrier = set(downs.values())
    pairs = [(a, b) for a in carrier for b in carrier if a.label <= b.label]
    return IotaResult(p, build_poset(carrier, pairs), downs)


def iota_preserves_strict(p: Poset) -> bool:
    return all(
        p.strict_down_set(a) < p.strict_down_set(b)
        for a in p for b in p if p.lt(a, b)
    )


def iota_is_join_hom(p: Poset) -> bool:
    """True iff the down-set of every join is the union of the two down-sets."""
    if not p.is_join_semilattice():
        raise NotAJoinSemilattice(f"{p!r} lacks some joins")
    return all(
        p.strict_down_set(p.join(a, b)) == p.strict_down_set(a) | p.strict_down_set(b)
        for a in p for b in p
    )


def exists_join_hom_onto_image(p: Poset, *, max_elements: int = 4) -> bool:
    """Search every surjection from ``p`` onto its down-set image for a join homomorphism.

    This is the broader reading of "homomorphic": some structure-preserving
    map, not necessarily the down-set map itself. Exhaustive, so small
    carriers only.
    """
    if len(p) > max_elements:
        raise SizeExceeded(f"map search is limited to {max_elements} elements")
    if not p.is_join_semilattice():
        raise NotAJoinSemilattice(f"{p!r} lacks some joins")
    src = p.elements
    targets = [e.label for e in iota(p).image.elements]
    joins = {(a, b): p.join(a, b) for a in src for b in src}
    for values in itertools.product(targets, repeat=len(src)):
        if set(values) != set(targets):
            continue
        f = dict(zip(src, values))
        if all(f[j] == f[a] | f[b] for (a, b), j in joins.items()):
            return True
    return False


def enumerate_posets(n: int, joins_only: bool = False) -> Iterator[Poset]:
    """Every labelled poset on the elements ``0 .. n-1``, each exactly once.

    Builds posets on ``k+1`` elements from those on ``k`` by choosing, for
    the new element, a down-set below it and an up-set above it with the
    whole down-set below the whole up-set.
    """
    if n > MAX_ENUMERATION:
        raise SizeExceeded(f"enumeration is limited to {MAX_ENUMERATION} elements")
    if n < 1:
        return
    elems = tuple(ElementId(str(k)) for k in range(n))
    for strict in _strict_orders(n):
        p = build_poset(elems, ((elems[a], elems[b]) for a, b in strict))
        if not joins_only or p.is_join_semilattice():
            yield p


def _strict_orders(n: int) -> Iterator[frozenset[tuple[int, int]]]:
    if n == 1:
        yield frozenset()
        return
    new = n - 1
    old = list(range(new))
    for rel in _strict_orders(new):
        below = {x: {a for a, b in rel if b == x} for x in old}
        above = {x: {b for a, b in rel if a == x} for x in old}
        downs = [s for s in _subsets(old) if all(below[x] <= s for x in s)]
        ups = [s for s in _subsets(old) if all(above[x] <= s for x in s)]
        for d in downs:
            for u in ups:
                if d & u or any((x, y) not in rel for x in d for y in u):
                    continue
                yield rel | {(x, new) for x in d} | {(new, y) for y in u}


def _subsets(xs: list[int]) -> Iterator[frozenset[int]]:
    for r in range(len(xs) + 1):
        for c in itertools.combinations(xs, r):
            yield frozenset(c)
