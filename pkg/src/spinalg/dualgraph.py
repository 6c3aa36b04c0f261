"""Dual graphs of stable curves and their admissible twist assignments.

A dual graph records one vertex per irreducible component (with its
geometric genus), one edge per node, and one leg per marked point.  A
boundary stratum of the level-r moduli problem is such a graph together
with a twist in {0, .., r-1} on every half edge: legs are pinned by the
type, the two halves of each edge must sum to 0 mod r (the balanced
condition), and each vertex must satisfy an integrality constraint for
the root bundle to exist on its component.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .twists import TwistData, balanced_partner, index_from_twist


@dataclass(frozen=True)
class DualGraph:
    """Connected stable-curve dual graph: vertices, edges, legs.

    vertices: (id, genus) pairs with unique ids.
    edges: (id, id) pairs; loops allowed, multiplicity by repetition.
    legs: (vertex id, marking) with markings exactly 1..n in some order.
    """

    vertices: tuple[tuple[str, int], ...]
    edges: tuple[tuple[str, str], ...]
    legs: tuple[tuple[str, int], ...]

    def __post_init__(self):
        ids = [v for v, _g in self.vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("vertex ids must be unique")
        if not ids:
            raise ValueError("a dual graph needs at least one vertex")
        known = set(ids)
        for v, g in self.vertices:
            if g < 0:
                raise ValueError(f"vertex {v} has negative genus")
        for a, b in self.edges:
            if a not in known or b not in known:
                raise ValueError(f"edge ({a}, {b}) mentions an unknown vertex")
        for v, _m in self.legs:
            if v not in known:
                raise ValueError(f"leg at unknown vertex {v}")
        markings = sorted(m for _v, m in self.legs)
        if markings != list(range(1, len(markings) + 1)):
            raise ValueError("leg markings must be exactly 1..n")
        if not self._connected():
            raise ValueError("dual graph must be connected")

    def _connected(self) -> bool:
        ids = [v for v, _g in self.vertices]
        seen = {ids[0]}
        frontier = [ids[0]]
        while frontier:
            cur = frontier.pop()
            for a, b in self.edges:
                for nxt in ((b,) if a == cur else ()) + ((a,) if b == cur else ()):
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
        return len(seen) == len(ids)

    @property
    def n_markings(self) -> int:
        return len(self.legs)

    def genus_of(self, vid: str) -> int:
        for v, g in self.vertices:
            if v == vid:
                return g
        raise ValueError(f"unknown vertex {vid}")

    def valence(self, vid: str) -> int:
        """Half edges at a vertex: legs plus edge ends, loops counting twice."""
        val = sum(1 for v, _m in self.legs if v == vid)
        for a, b in self.edges:
            val += (a == vid) + (b == vid)
        return val


def graph_genus(graph: DualGraph) -> int:
    """Arithmetic genus: sum of vertex genera plus the loop rank of the graph."""
    return (sum(g for _v, g in graph.vertices)
            + len(graph.edges) - len(graph.vertices) + 1)


def stability_check(graph: DualGraph) -> bool:
    """Every vertex has 2g_v - 2 + valence > 0 and the global (g, n) is stable."""
    for v, g in graph.vertices:
        if 2 * g - 2 + graph.valence(v) <= 0:
            return False
    return 2 * graph_genus(graph) - 2 + graph.n_markings > 0


def spin_chi(g: int, n: int, r: int, m: tuple[int, ...]) -> int | None:
    """Euler characteristic of the r-th root sheaf of type m, or None.

    Equals 1 - g + (2g - 2 + n - sum(m)) / r when r divides the
    numerator; otherwise no root sheaf of that type exists and the
    function returns None.
    """
    if r < 1:
        raise ValueError("level r must be a positive integer")
    if len(m) != n:
        raise ValueError(f"type length {len(m)} does not match n={n}")
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable")
    numerator = 2 * g - 2 + n - sum(m)
    if numerator % r != 0:
        return None
    return 1 - g + numerator // r


def deformation_dimension(g: int, n: int, unbalanced_nodes: int = 0) -> int:
    """Dimension 3g - 3 + n of the moduli spot, minus one per unbalanced node."""
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise ValueError(f"(g, n) = ({g}, {n}) is not stable")
    if unbalanced_nodes < 0:
        raise ValueError("node count must be nonnegative")
    return 3 * g - 3 + n - unbalanced_nodes


@dataclass(frozen=True)
class TwistAssignment:
    """Twists on all half edges: per-leg (marking order) and per-edge pairs."""

    r: int
    leg_twists: tuple[int, ...]
    edge_twists: tuple[tuple[int, int], ...]

    def leg_data(self) -> tuple[TwistData, ...]:
        return tuple(index_from_twist(k, self.r) for k in self.leg_twists)

    def edge_data(self) -> tuple[tuple[TwistData, TwistData], ...]:
        return tuple((index_from_twist(k1, self.r), index_from_twist(k2, self.r))
                     for k1, k2 in self.edge_twists)


def vertex_degree_test(graph: DualGraph, vid: str, assignment: TwistAssignment) -> bool:
    """r divides 2g_v - 2 + valence - (incident twists) at the vertex.

    This is the numerator of the root-degree on the component attached
    to the vertex; the root bundle exists there exactly when it is an
    integer multiple of r.  Leg twists are indexed by marking.
    """
    r = assignment.r
    total = 0
    for v, mk in graph.legs:
        if v == vid:
            total += assignment.leg_twists[mk - 1]
    for (a, b), (k1, k2) in zip(graph.edges, assignment.edge_twists):
        if a == vid:
            total += k1
        if b == vid:
            total += k2
    g = graph.genus_of(vid)
    return (2 * g - 2 + graph.valence(vid) - total) % r == 0


def enumerate_assignments(graph: DualGraph, r: int, m: tuple[int, ...]) -> list[TwistAssignment]:
    """All admissible balanced twist assignments, in lexicographic edge order.

    Legs are forced to their type residues mod r; each edge ranges over
    the r balanced pairs (k, r - k mod r); a candidate survives when
    every vertex passes the degree test.
    """
    if r < 1:
        raise ValueError("level r must be a positive integer")
    if len(m) != graph.n_markings:
        raise ValueError(f"type length {len(m)} does not match the {graph.n_markings} legs")
    if not stability_check(graph):
        raise ValueError("graph is not stable")
    leg_twists = tuple(mi % r for mi in m)
    out = []
    for heads in iproduct(range(r), repeat=len(graph.edges)):
        edge_twists = tuple((k, balanced_partner(k, r)) for k in heads)
        cand = TwistAssignment(r, leg_twists, edge_twists)
        if all(vertex_degree_test(graph, v, cand) for v, _g in graph.vertices):
            out.append(cand)
    return out
