"""Quick invariant sweeps run by ``valuelattice selftest``.

Each check returns True on success. The sweeps are small versions of the
test-suite properties, meant as a smoke test of an installed copy.
"""

from __future__ import annotations

import itertools
from typing import Callable

from . import scenarios as sc
from .downset import enumerate_posets, iota_is_join_hom, iota_preserves_strict
from .inner_state import Infeasible, all_states, detect_incompatibility
from .poset import build_poset
from .value_model import Power, base, make_lrv


def poset_laws() -> bool:
    for n in range(1, 5):
        for p in enumerate_posets(n):
            if build_poset(p.elements, p.hasse()) != p:
                return False
            for a, b in itertools.product(p, repeat=2):
                j = p.join(a, b)
                if j != p.join(b, a) or (p.leq(a, b) and j != b):
                    return False
                if a != b and p.leq(a, b) and p.leq(b, a):
                    return False
    return True


def iota_theorem() -> bool:
    return all(
        iota_is_join_hom(p) == p.is_total()
        for n in range(1, 6)
        for p in enumerate_posets(n, joins_only=True)
    )


def iota_strict() -> bool:
    return all(iota_preserves_strict(p) for n in range(1, 6) for p in enumerate_posets(n))


def state_order() -> bool:
    lrv = make_lrv([("A", Power(base("S", "x", "y"))), ("B", base("C", "c", "d", order=[("c", "d")]))])
    states = list(all_states(lrv))
    for k1, k2 in itertools.product(states, repeat=2):
        if k1.leq(k2) and k2.leq(k1) and k1 != k2:
            return False
        u = k1.compose(k2)
        if not isinstance(u, Infeasible) and not (k1.leq(u) and k2.leq(u)):
            return False
    return True


def ellsberg() -> bool:
    s = sc.ellsberg_scenario()
    return detect_incompatibility("BlackVsYellow", sc.BLACK, s.k_ai, s.k_hi)


def wigner() -> bool:
    return sc.run_wigner(0)[-1].endswith("true") and sc.run_wigner(1)[-1].endswith("true")


CHECKS: dict[str, Callable[[], bool]] = {
    "poset laws (all posets up to 4 elements)": poset_laws,
    "down-set map is a join homomorphism iff total (up to 5)": iota_theorem,
    "down-set map preserves the strict order (up to 5)": iota_strict,
    "inner-state order and composition upper bounds": state_order,
    "ellsberg incompatibility": ellsberg,
    "wigner incompatibility after observation": wigner,
}


def run() -> list[tuple[str, bool]]:
    return [(name, check()) for name, check in CHECKS.items()]
