"""The dimension-count meta-dimension and its consistency verdicts."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownIndex
from .inner_state import InnerState
from .value_model import Base, Power, SpecExpr

VDIM = "V_dim"

# whether the meta-dimension counts itself when sizing a state's domain
COUNT_VDIM_ITSELF = True


@dataclass(frozen=True)
class DimSpecValue:
    """A finite, non-empty set of admissible dimension counts."""

    admissible: frozenset[int]

    def __init__(self, admissible: Iterable[int]):
        admissible = frozenset(admissible)
        if not admissible:
            raise ValueError("admissible counts must be non-empty")
        if any(n < 0 for n in admissible):
            raise ValueError("dimension counts are non-negative")
        object.__setattr__(self, "admissible", admissible)

    def labels(self) -> frozenset[str]:
        return frozenset(str(n) for n in self.admissible)


@dataclass(frozen=True)
class MetaVerdict:
    specified: bool
    ambiguous: bool | None = None
    consistent: bool | None = None

    def __str__(self) -> str:
        if not self.specified:
            return "unspecified"
        return (
            "specified, "
            + ("ambiguous" if self.ambiguous else "unambiguous")
            + ", "
            + ("consistent" if self.consistent else "inconsistent")
        )


def vdim_spec(max_count: int) -> SpecExpr:
    """Counts ``0 .. max_count`` under the power set, ordered by inclusion."""
    return Power(Base("N0", tuple(str(n) for n in range(max_count + 1))))


def attach_vdim(k: InnerState, a: DimSpecValue | Iterable[int]) -> InnerState:
    if VDIM not in k.lrv:
        raise UnknownIndex(f"the LRV has no {VDIM} dimension")
    if not isinstance(a, DimSpecValue):
        a = DimSpecValue(a)
    return k.with_value(VDIM, a.labels())


def admissible_counts(k: InnerState) -> frozenset[int]:
    return frozenset(int(e.plain()) for e in k.project(VDIM).label)


def classify(k: InnerState, *, count_vdim: bool = COUNT_VDIM_ITSELF) -> MetaVerdict:
    if VDIM not in k.domain:
        return MetaVerdict(specified=False)
    counts = admissible_counts(k)
    size = len(k.domain) if count_vdim else len(k.domain) - 1
    return MetaVerdict(True, ambiguous=len(counts) > 1, consistent=size in counts)
