"""Inner states: partial assignments of one element per dimension.

A state is stored as the mapping ``index -> element`` over its domain.
States over the same LRV are ordered by domain inclusion plus componentwise
dominance on the smaller domain; composition takes dimensionwise joins.
"""

from __future__ import annotations

import enum
import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

from .errors import LrvMismatch, NotInDomain, SizeExceeded, UnknownIndex
from .poset import ElementId, render_label
from .value_model import LRV

DEFAULT_MAX_VISIBILITY = 16


class CompareResult(enum.Enum):
    EQUAL = "equal"
    LESS_EQ = "less_eq"
    GREATER_EQ = "greater_eq"
    INCOMPARABLE = "incomparable"

    @property
    def is_leq(self) -> bool:
        return self in (CompareResult.EQUAL, CompareResult.LESS_EQ)

    @property
    def is_geq(self) -> bool:
        return self in (CompareResult.EQUAL, CompareResult.GREATER_EQ)


@dataclass(frozen=True)
class Infeasible:
    """Composition failed: the dimension ``witness`` has no join for the two values."""

    witness: str


class InnerState:
    __slots__ = ("lrv", "_assign", "_key")

    def __init__(self, lrv: LRV, assign: Mapping[str, ElementId]):
        # trusted constructor; use make_state for validation
        self.lrv = lrv
        self._assign = dict(sorted(assign.items()))
        self._key = tuple(self._assign.items())

    @property
    def assign(self) -> Mapping[str, ElementId]:
        return dict(self._assign)

    @property
    def domain(self) -> frozenset[str]:
        return frozenset(self._assign)

    @property
    def codomain(self) -> frozenset[ElementId]:
        return frozenset(self._assign.values())

    def __len__(self) -> int:
        return len(self._assign)

    def __iter__(self) -> Iterator[str]:
        return iter(self._assign)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InnerState):
            return NotImplemented
        return self._key == other._key and _same_lrv(self.lrv, other.lrv)

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        body = ", ".join(f"{i}: {local_name(e)}" for i, e in self._assign.items())
        return "{" + body + "}"

    def project(self, i: str) -> ElementId:
        """The component along ``i``, returned whole (tuples and atoms are never opened)."""
        try:
            return self._assign[i]
        except KeyError:
            raise NotInDomain(f"{i!r} is not in the domain {sorted(self._assign)}") from None

    def restrict(self, J: Iterable[str]) -> InnerState:
        J = set(J)
        return InnerState(self.lrv, {i: e for i, e in self._assign.items() if i in J})

    def with_value(self, i: str, value) -> InnerState:
        """Copy with ``i`` assigned (added or replaced)."""
        e = self.lrv.element(i, value)
        return InnerState(self.lrv, {**self._assign, i: e})

    def leq(self, other: InnerState) -> bool:
        _require_same(self, other)
        if not self.domain <= other.domain:
            return False
        return all(self.lrv[i].poset.leq(a, other._assign[i]) for i, a in self._assign.items())

    def compare(self, other: InnerState) -> CompareResult:
        _require_same(self, other)
        if self._key == other._key:
            return CompareResult.EQUAL
        if self.leq(other):
            return CompareResult.LESS_EQ
        if other.leq(self):
            return CompareResult.GREATER_EQ
        return CompareResult.INCOMPARABLE

    def compose(self, other: InnerState) -> InnerState | Infeasible:
        """Dimensionwise join; Infeasible names the first dimension lacking a join."""
        _require_same(self, other)
        merged = dict(self._assign)
        for i in sorted(other._assign):
            b = other._assign[i]
            if i not in merged:
                merged[i] = b
                continue
            j = self.lrv[i].poset.join(merged[i], b)
            if j is None:
                return Infeasible(i)
            merged[i] = j
        return InnerState(self.lrv, merged)

    def potential_value(self, *, max_visibility: int = DEFAULT_MAX_VISIBILITY) -> set[frozenset[str]]:
        """Every transition label an agent seeing this domain can express."""
        dom = sorted(self._assign)
        if len(dom) > max_visibility:
            raise SizeExceeded(f"2^{len(dom)} labels exceeds the cap of 2^{max_visibility}")
        return {
            frozenset(c)
            for r in range(1, len(dom) + 1)
            for c in itertools.combinations(dom, r)
        }


def local_name(e: ElementId) -> str:
    """Element name without the owning dimension at the head of its context."""
    return ".".join(e.context[1:] + (render_label(e.label),))


def _same_lrv(a: LRV, b: LRV) -> bool:
    return a is b or a == b


def _require_same(k1: InnerState, k2: InnerState) -> None:
    if not _same_lrv(k1.lrv, k2.lrv):
        raise LrvMismatch("inner states reference different LRVs")


def make_state(lrv: LRV, assign: Mapping[str, object] | None = None) -> InnerState:
    """Validate ``assign`` against ``lrv``; values may be ElementIds or plain labels."""
    resolved = {i: lrv.element(i, v) for i, v in (assign or {}).items()}
    return InnerState(lrv, resolved)


def compare(k1: InnerState, k2: InnerState) -> CompareResult:
    return k1.compare(k2)


def compose(k1: InnerState, k2: InnerState) -> InnerState | Infeasible:
    return k1.compose(k2)


def restrict(k: InnerState, J: Iterable[str]) -> InnerState:
    return k.restrict(J)


def project(k: InnerState, i: str) -> ElementId:
    return k.project(i)


def potential_value(k: InnerState, *, max_visibility: int = DEFAULT_MAX_VISIBILITY) -> set[frozenset[str]]:
    return k.potential_value(max_visibility=max_visibility)


def detect_incompatibility(i: str, a, k_a: InnerState, k_h: InnerState) -> bool:
    """Whether value ``a`` along ``i`` is seen by ``k_a`` yet unreachable for ``k_h``.

    All three must hold: ``a`` is dominated by ``k_a``'s component on ``i``;
    ``k_a`` restricted to the shared domain is below ``k_h``; and ``a`` is
    not dominated by ``k_h`` on ``i`` (vacuously so when ``k_h`` lacks ``i``).
    """
    _require_same(k_a, k_h)
    dim = k_a.lrv[i]
    a = dim.find(a)
    seen_by_a = i in k_a.domain and dim.poset.leq(a, k_a.project(i))
    if not seen_by_a:
        return False
    shared = k_a.restrict(k_h.domain & k_a.domain)
    if not shared.leq(k_h):
        return False
    return not (i in k_h.domain and dim.poset.leq(a, k_h.project(i)))


def all_states(lrv: LRV, indices: Iterable[str] | None = None) -> Iterator[InnerState]:
    """Every inner state over ``indices`` (default: the whole LRV)."""
    idx = list(lrv.index if indices is None else indices)
    options = [[None, *lrv[i].poset.elements] for i in idx]
    for combo in itertools.product(*options):
        yield InnerState(lrv, {i: e for i, e in zip(idx, combo) if e is not None})


@dataclass(frozen=True)
class Transition:
    """A labelled move between two named process states."""

    source: str
    target: str
    label: frozenset[str]

    @classmethod
    def make(cls, lrv: LRV, source: str, target: str, label: Iterable[str]) -> Transition:
        label = frozenset(label)
        if not label:
            raise ValueError("a transition label needs at least one dimension")
        unknown = sorted(label - set(lrv.index))
        if unknown:
            raise UnknownIndex(f"label mentions unknown dimensions: {', '.join(unknown)}")
        return cls(source, target, label)
