"""Built-in worked scenarios.

* ``fossowamba``: the Big Data value dimensions (transparency, data
  policies, technology) and the four derived dimensions built from them.
* ``ellsberg``: the three-colour urn, encoded structurally. The urn counts
  and payoffs are metadata only.
* ``wigner``: the observer/super-observer state machine, with an AI in the
  friend's role and a human intelligence as the super-observer.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field, replace
from typing import NamedTuple

from .errors import IncompleteProfile, PhaseError
from .inner_state import InnerState, compare, compose, detect_incompatibility, make_state, restrict
from .value_model import (
    LRV,
    ElementsAsAtoms,
    Power,
    Product,
    UnionAsSets,
    base,
    make_lrv,
)

# -- Fosso Wamba value dimensions ------------------------------------------

F = base("F", "f1", "f2", "f3", "f4")
M = base("M", "m1", "m2", "m3")
B = base("B", "b1", "b2", "b3")

FOSSOWAMBA_LABELS = {
    "f1": "reduce search time",
    "f2": "reduce processing time",
    "f3": "reduce time to market",
    "f4": "improve quality",
    "m1": "privacy",
    "m2": "security",
    "m3": "liability",
    "b1": "storage",
    "b2": "computing",
    "b3": "analytical software",
}


def fossowamba_lrv(*, split_copies: bool = False) -> LRV:
    """V1..V7; with ``split_copies`` also three separate copies V6_1..V6_3 of M.

    V4 merges the labels of V2 and V3 (the two factors read as interrelated).
    """
    entries = [
        ("V1", F),
        ("V2", M),
        ("V3", B),
        ("V4", UnionAsSets((M, B))),
        ("V5", ElementsAsAtoms((F, M, "f1", "b2"))),
        ("V6", Product((M, M, M))),
        ("V7", Power(F)),
    ]
    if split_copies:
        entries += [(f"V6_{k}", M) for k in (1, 2, 3)]
    return make_lrv(entries)


def fossowamba_states(lrv: LRV | None = None) -> tuple[InnerState, InnerState]:
    """The two readings of "privacy, security and liability together".

    The first state puts the triple into V6 as one combined element; the
    second spreads it over three independent copies of M.
    """
    lrv = lrv or fossowamba_lrv(split_copies=True)
    combined = make_state(lrv, {"V2": "m1", "V5": "M", "V6": ("m1", "m2", "m3")})
    split = make_state(lrv, {"V2": "m1", "V5": "M", "V6_1": "m1", "V6_2": "m2", "V6_3": "m3"})
    return combined, split


# -- Ellsberg urn ------------------------------------------------------------

RED, BLACK, YELLOW = "Red", "Black", "Yellow"


@dataclass(frozen=True)
class Bet:
    id: str
    winning_colours: frozenset[str]
    payoff: int = 100


BETS = (
    Bet("pi1a", frozenset({RED})),
    Bet("pi1b", frozenset({BLACK})),
    Bet("pi2a", frozenset({RED, YELLOW})),
    Bet("pi2b", frozenset({BLACK, YELLOW})),
)
BET_IDS = tuple(b.id for b in BETS)

URN = {"total": 90, "red": 30, "black_or_yellow": 60}

# Nonempty subsets of {Black, Yellow} under reverse inclusion: the coarse
# {Black, Yellow} sits below the singletons.
_COLOURS = base(
    "BlackYellow",
    "BlackOrYellow", BLACK, YELLOW,
    order=[("BlackOrYellow", BLACK), ("BlackOrYellow", YELLOW)],
)


class EllsbergScenario(NamedTuple):
    lrv: LRV
    k_hi: InnerState
    k_ai: InnerState
    bets: tuple[Bet, ...]
    urn: dict


def ellsberg_lrv() -> LRV:
    """Red graded coarse < assessed; BlackYellow as seen by everyone; and a
    BlackVsYellow copy standing for the discrimination only the AI reaches."""
    return make_lrv([
        ("Red", base("Red", "coarse", "assessed", order=[("coarse", "assessed")])),
        ("BlackYellow", _COLOURS),
        ("BlackVsYellow", _COLOURS),
    ])


def ellsberg_scenario() -> EllsbergScenario:
    lrv = ellsberg_lrv()
    k_hi = make_state(lrv, {"Red": "assessed", "BlackYellow": "BlackOrYellow"})
    k_ai = make_state(lrv, {"BlackYellow": "BlackOrYellow", "BlackVsYellow": BLACK})
    return EllsbergScenario(lrv, k_hi, k_ai, BETS, dict(URN))


@dataclass(frozen=True)
class PreferenceProfile:
    """Weak preference statements ``a <=_d b`` over the four bets.

    The stored relation is closed reflexively and transitively.
    """

    relation: frozenset[tuple[str, str]]

    def __init__(self, relation=()):
        pairs = set(relation)
        unknown = {x for p in pairs for x in p} - set(BET_IDS)
        if unknown:
            raise ValueError(f"unknown bets: {', '.join(sorted(unknown))}")
        pairs |= {(b, b) for b in BET_IDS}
        changed = True
        while changed:
            extra = {(a, d) for a, b in pairs for c, d in pairs if b == c} - pairs
            changed = bool(extra)
            pairs |= extra
        object.__setattr__(self, "relation", frozenset(pairs))

    @classmethod
    def from_ranking(cls, low_to_high) -> PreferenceProfile:
        """Strict ranking, least preferred first."""
        ranked = list(low_to_high)
        return cls((a, b) for k, a in enumerate(ranked) for b in ranked[k:])

    @classmethod
    def strict(cls, *pairs: tuple[str, str]) -> PreferenceProfile:
        """``(a, b)`` means ``a`` strictly below ``b``."""
        return cls(pairs)

    def prefers_weakly(self, a: str, b: str) -> bool | None:
        """``a <=_d b``, or ``None`` when the profile says nothing about the pair."""
        if (a, b) not in self.relation and (b, a) not in self.relation:
            return None
        return (a, b) in self.relation


@dataclass(frozen=True)
class Satisfied:
    def __str__(self) -> str:
        return "satisfied"


@dataclass(frozen=True)
class Violated:
    """The two sides of the biconditional disagree."""

    first_pair: bool
    second_pair: bool

    def __str__(self) -> str:
        return (
            f"violated: (pi1a <= pi1b) is {str(self.first_pair).lower()} "
            f"but (pi2a <= pi2b) is {str(self.second_pair).lower()}"
        )


def sure_thing_check(p: PreferenceProfile) -> Satisfied | Violated:
    """Expected utility requires ``pi1a <= pi1b`` iff ``pi2a <= pi2b``.

    Adding Yellow to both bets of the first pair yields the second pair, so
    an expected-utility maximiser ranks both pairs the same way.
    """
    left = p.prefers_weakly("pi1a", "pi1b")
    right = p.prefers_weakly("pi2a", "pi2b")
    if left is None or right is None:
        missing = "pi1a/pi1b" if left is None else "pi2a/pi2b"
        raise IncompleteProfile(f"the profile does not compare {missing}")
    return Satisfied() if left == right else Violated(left, right)


def strict_orderings():
    """All 24 strict rankings of the four bets, least preferred first."""
    return itertools.permutations(BET_IDS)


# -- Wigner's friend -------------------------------------------------------

BD, AI, OUTCOME = "V_BD", "V_AI", "o_f"

# Factor readings of the Big Data and AI elements; F_0_1 is the trained
# AI's "f xor o(f)" acknowledgement, evaluated by xor_eval.
XOR_READING = {
    "F0": "{0}",
    "F1": "{1}",
    "F01": "{0,1}",
    "F_0_1": "{f xor o(f)}",
}


class Phase(enum.Enum):
    INITIAL = "initial"
    TRAINED = "trained"
    OBSERVED = "observed"
    HI_UPDATED = "hi_updated"


def wigner_lrv() -> LRV:
    """V_BD = {F0, F1, F01}, with F01 below both.
    V_AI = {F_0, F_1, F_0_1, F_01}, with F_01 < F_0_1 < F_0 and F_1.
    o_f = {out0, out1}, an antichain present from the start."""
    return make_lrv([
        (BD, base("BD", "F0", "F1", "F01", order=[("F01", "F0"), ("F01", "F1")])),
        (AI, base(
            "AI", "F_0", "F_1", "F_0_1", "F_01",
            order=[("F_01", "F_0_1"), ("F_0_1", "F_0"), ("F_0_1", "F_1")],
        )),
        (OUTCOME, base("of", "out0", "out1")),
    ])


@dataclass(frozen=True)
class WignerState:
    phase: Phase
    k_ai: InnerState
    k_hi: InnerState
    lrv: LRV = field(repr=False)
    outcome: int | None = None


def wigner_init() -> WignerState:
    lrv = wigner_lrv()
    return WignerState(Phase.INITIAL, make_state(lrv), make_state(lrv, {AI: "F_01"}), lrv)


def _expect(s: WignerState, phase: Phase, action: str) -> None:
    if s.phase is not phase:
        raise PhaseError(f"{action} needs phase {phase.value}, state is {s.phase.value}")


def wigner_train(s: WignerState) -> WignerState:
    _expect(s, Phase.INITIAL, "train")
    return replace(s, phase=Phase.TRAINED, k_ai=s.k_ai.with_value(BD, "F01"))


def wigner_observe(s: WignerState, u: int) -> WignerState:
    _expect(s, Phase.TRAINED, "observe")
    if u not in (0, 1):
        raise ValueError(f"outcome must be a bit, got {u!r}")
    k_ai = s.k_ai.with_value(BD, f"F{u}").with_value(OUTCOME, f"out{u}")
    return replace(s, phase=Phase.OBSERVED, k_ai=k_ai, outcome=u)


def wigner_hi_update(s: WignerState) -> WignerState:
    _expect(s, Phase.OBSERVED, "hi_update")
    return replace(s, phase=Phase.HI_UPDATED, k_hi=s.k_hi.with_value(AI, "F_0_1"))


def wigner_incompatible(s: WignerState) -> bool:
    """Incompatibility along the outcome dimension; false before any observation."""
    if s.outcome is None:
        return False
    return detect_incompatibility(OUTCOME, f"out{s.outcome}", s.k_ai, s.k_hi)


def xor_eval(f: int, o: int) -> int:
    if f not in (0, 1) or o not in (0, 1):
        raise ValueError("xor_eval takes bits")
    return f ^ o


# -- transcripts ------------------------------------------------------------

def _yn(b: bool) -> str:
    return "true" if b else "false"


def run_wigner(u: int = 0) -> list[str]:
    lines = []
    s = wigner_init()
    lines.append(f"[{s.phase.value}] k_ai = {s.k_ai}; k_hi = {s.k_hi}")
    s = wigner_train(s)
    lines.append(f"[{s.phase.value}] k_ai = {s.k_ai}; pi_BD(k_ai) = {s.k_ai.project(BD).label}")
    before = s.k_ai.domain
    s = wigner_observe(s, u)
    grown = sorted(s.k_ai.domain - before)
    lines.append(f"[{s.phase.value} u={u}] k_ai = {s.k_ai}; domain grew by {{{', '.join(grown)}}}")
    s = wigner_hi_update(s)
    lines.append(f"[{s.phase.value}] k_hi = {s.k_hi}; pi_AI(k_hi) = {s.k_hi.project(AI).label}")
    lines.append(f"o_f in domain of k_hi: {_yn(OUTCOME in s.k_hi.domain)}")
    lines.append(f"xor(f={u}, o(f)={u}) = {xor_eval(u, u)}")
    lines.append(f"incompatibility detected after observation: {_yn(wigner_incompatible(s))}")
    return lines


def run_ellsberg() -> list[str]:
    sc = ellsberg_scenario()
    lines = [
        f"urn: {sc.urn['red']} red, {sc.urn['black_or_yellow']} black or yellow, {sc.urn['total']} total",
        f"K_HI = {sc.k_hi}",
        f"k_AI = {sc.k_ai}",
        f"compare(K_HI|BlackYellow, k_AI) = {compare(restrict(sc.k_hi, ['BlackYellow']), sc.k_ai).value}",
    ]
    incompatible = detect_incompatibility("BlackVsYellow", BLACK, sc.k_ai, sc.k_hi)
    lines.append(f"incompatible: {_yn(incompatible)}")
    merged = compose(sc.k_hi, sc.k_ai)
    after = detect_incompatibility("BlackVsYellow", BLACK, sc.k_ai, merged)
    lines.append(f"after composing K_HI with k_AI, incompatible: {_yn(after)}")
    classic = PreferenceProfile.strict(("pi1b", "pi1a"), ("pi2a", "pi2b"))
    lines.append(f"sure-thing on pi1b < pi1a, pi2a < pi2b: {sure_thing_check(classic)}")
    return lines


def run_fossowamba() -> list[str]:
    lrv = fossowamba_lrv(split_copies=True)
    lines = [f"{i}: {len(lrv[i])} elements" for i in lrv.index]
    combined, split = fossowamba_states(lrv)
    lines.append(f"combined = {combined}")
    lines.append(f"split = {split}")
    lines.append(f"compare(combined, split) = {compare(combined, split).value}")
    lines.append(f"project(combined, V6) = {combined.project('V6')}")
    return lines


SCENARIOS = {
    "fossowamba": run_fossowamba,
    "ellsberg": run_ellsberg,
    "wigner": run_wigner,
}
