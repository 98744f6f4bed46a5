"""Graphviz DOT rendering of Hasse diagrams."""

from __future__ import annotations

from .poset import Poset


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(p: Poset, name: str = "poset") -> str:
    """A deterministic digraph with one edge per covering pair, drawn bottom to top.

    Node ids are the qualified element names (context path and label joined
    by dots); nodes and edges are emitted in lexicographic order.
    """
    nodes = sorted(e.name for e in p)
    edges = sorted((a.name, b.name) for a, b in p.hasse())
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    lines += [f"  {_quote(n)};" for n in nodes]
    lines += [f"  {_quote(a)} -> {_quote(b)};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
