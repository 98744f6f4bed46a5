"""Turn a parsed ScenarioDoc into an LRV with states, and answer its queries."""

from __future__ import annotations

from dataclasses import dataclass

from . import scenarios
from .downset import iota, iota_is_join_hom
from .dsl import Ref, ScenarioDoc
from .inner_state import Infeasible, InnerState, detect_incompatibility, local_name, make_state
from .meta import classify
from .value_model import LRV, DisjointUnion, Power, Product, UnionAsSets, make_lrv


def resolve(e, env: dict):
    """Replace dimension references by the referenced specification."""
    if isinstance(e, Ref):
        return env[e.name]
    if isinstance(e, Power):
        return Power(resolve(e.inner, env))
    if isinstance(e, Product):
        return Product(tuple(resolve(f, env) for f in e.factors))
    if isinstance(e, DisjointUnion):
        return DisjointUnion(tuple(resolve(p, env) for p in e.parts))
    if isinstance(e, UnionAsSets):
        return UnionAsSets(tuple(resolve(p, env) for p in e.parts))
    return e


@dataclass
class Workspace:
    lrv: LRV
    states: dict[str, InnerState]


def build(doc: ScenarioDoc, *, max_carrier: int | None = None) -> Workspace:
    env: dict = {}
    for d in doc.dims:
        env[d.name] = resolve(d.expr, env)
    lrv = make_lrv(list(env.items()), max_carrier=max_carrier)
    states = {s.name: make_state(lrv, dict(s.assign)) for s in doc.states}
    return Workspace(lrv, states)


def _yn(b: bool) -> str:
    return "true" if b else "false"


def run_queries(doc: ScenarioDoc, *, max_carrier: int | None = None) -> list[str]:
    ws = build(doc, max_carrier=max_carrier)
    out: list[str] = []
    for q in doc.queries:
        a = q.args
        if q.kind == "compare":
            result = ws.states[a[0]].compare(ws.states[a[1]])
            out.append(f"compare {a[0]} {a[1]}: {result.value}")
        elif q.kind == "compose":
            result = ws.states[a[0]].compose(ws.states[a[1]])
            if isinstance(result, Infeasible):
                out.append(f"compose {a[0]} {a[1]}: infeasible at {result.witness}")
            else:
                out.append(f"compose {a[0]} {a[1]}: {result}")
        elif q.kind == "incompat":
            k_a, dim, value, k_h = a
            hit = detect_incompatibility(dim, value, ws.states[k_a], ws.states[k_h])
            out.append(f"incompatible: {_yn(hit)}")
        elif q.kind == "meta":
            out.append(f"meta {a[0]}: {classify(ws.states[a[0]])}")
        elif q.kind == "iota":
            p = ws.lrv.poset(a[0])
            r = iota(p)
            hom = _yn(iota_is_join_hom(p)) if p.is_join_semilattice() else "n/a"
            out.append(
                f"iota {a[0]}: {len(r.image)} images from {len(p)} elements; "
                f"injective: {_yn(r.injective)}; total: {_yn(p.is_total())}; join-hom: {hom}"
            )
        elif q.kind == "hasse":
            covers = ws.lrv.poset(a[0]).hasse()
            body = ", ".join(f"{local_name(x)} < {local_name(y)}" for x, y in covers)
            out.append(f"hasse {a[0]}: {body or '(none)'}")
        elif q.kind == "run":
            out.extend(scenarios.SCENARIOS[a[0]]())
    return out
