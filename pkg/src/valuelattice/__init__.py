"""Finite order-theoretic models of value: dimensions as posets, inner
states as partial assignments, and the comparisons, compositions and
updates between them."""

from .downset import IotaResult, enumerate_posets, iota, iota_is_join_hom, iota_preserves_strict
from .errors import *  # noqa: F401,F403
from .inner_state import (
    CompareResult,
    Infeasible,
    InnerState,
    Transition,
    compare,
    compose,
    detect_incompatibility,
    make_state,
    potential_value,
    project,
    restrict,
)
from .meta import DimSpecValue, MetaVerdict, attach_vdim, classify
from .poset import ElementId, Poset, build_poset
from .value_model import (
    LRV,
    Base,
    Dimension,
    DisjointUnion,
    ElementsAsAtoms,
    Power,
    Product,
    UnionAsSets,
    eval_spec,
    make_lrv,
    rho_J,
)

__version__ = "0.1.0"
