"""Bidirected multigraphs: signed edges, paths, restrictions and reductions.

A bidirected multigraph carries one sign (+ or -) at each end of each edge.
A path is valid when the two path edges meeting at any internal vertex have
distinct signs there; an X-path is a non-trivial valid path that meets the
vertex set X exactly in its two endpoints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    GraphFrozen,
    LoopRejected,
    SideConditionViolated,
    UnknownVertex,
)


class Sign(enum.Enum):
    """One end-sign of an edge; negation swaps the two values."""

    PLUS = "+"
    MINUS = "-"

    def opposite(self) -> "Sign":
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, token: str) -> "Sign":
        if token == "+":
            return cls.PLUS
        if token == "-":
            return cls.MINUS
        raise ValueError(f"not a sign: {token!r}")


PLUS = Sign.PLUS
MINUS = Sign.MINUS

VertexId = int
EdgeId = int


@dataclass(frozen=True)
class Edge:
    """One signed edge: endpoints u < v is NOT required, but u != v is."""

    u: VertexId
    sign_u: Sign
    v: VertexId
    sign_v: Sign

    def other(self, w: VertexId) -> VertexId:
        return self.v if w == self.u else self.u

    def sign_at(self, w: VertexId) -> Sign:
        """Sign of this edge at endpoint w."""
        if w == self.u:
            return self.sign_u
        if w == self.v:
            return self.sign_v
        raise UnknownVertex(f"vertex {w} is not an endpoint of this edge")

    def joins(self, a: VertexId, b: VertexId) -> bool:
        return {self.u, self.v} == {a, b}


class BidirectedMultigraph:
    """Vertices are dense ints assigned in insertion order; edges likewise.

    The graph is mutable while being built and may be frozen afterwards;
    frozen graphs are safe to share between threads. Parallel edges are kept
    as distinct edges (even with identical sign pairs); loops are rejected.
    """

    def __init__(self) -> None:
        self._edges: list[Edge] = []
        self._incidence: list[list[EdgeId]] = []
        self._frozen = False

    # -- construction ------------------------------------------------------

    def add_vertex(self) -> VertexId:
        """Append a fresh vertex and return its id."""
        if self._frozen:
            raise GraphFrozen("cannot add a vertex to a frozen graph")
        self._incidence.append([])
        return len(self._incidence) - 1

    def add_vertices(self, count: int) -> list[VertexId]:
        return [self.add_vertex() for _ in range(count)]

    def add_edge(self, u: VertexId, sign_u: Sign, v: VertexId, sign_v: Sign) -> EdgeId:
        """Append an edge with the given end-signs and return its id."""
        if self._frozen:
            raise GraphFrozen("cannot add an edge to a frozen graph")
        if u == v:
            raise LoopRejected(f"loop at vertex {u}")
        for w in (u, v):
            if not self.has_vertex(w):
                raise UnknownVertex(f"vertex {w} does not exist")
        eid = len(self._edges)
        self._edges.append(Edge(u, sign_u, v, sign_v))
        self._incidence[u].append(eid)
        self._incidence[v].append(eid)
        return eid

    def freeze(self) -> "BidirectedMultigraph":
        self._frozen = True
        return self

    # -- queries -----------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._incidence)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def vertices(self) -> range:
        return range(self.vertex_count)

    def has_vertex(self, v: VertexId) -> bool:
        return 0 <= v < self.vertex_count

    def has_edge(self, e: EdgeId) -> bool:
        return 0 <= e < self.edge_count

    def edge(self, e: EdgeId) -> Edge:
        if not self.has_edge(e):
            raise UnknownVertex(f"edge {e} does not exist")
        return self._edges[e]

    def incident_edges(self, v: VertexId) -> Sequence[EdgeId]:
        """Edge ids incident to v, in insertion (= id) order."""
        if not self.has_vertex(v):
            raise UnknownVertex(f"vertex {v} does not exist")
        return tuple(self._incidence[v])

    def sign(self, v: VertexId, e: EdgeId) -> Sign:
        """The sign of half-edge (v, e)."""
        return self.edge(e).sign_at(v)

    def check_vertex_set(self, vs: Iterable[VertexId]) -> frozenset[VertexId]:
        out = frozenset(vs)
        for v in out:
            if not self.has_vertex(v):
                raise UnknownVertex(f"vertex {v} does not exist")
        return out


@dataclass(frozen=True)
class SignedPath:
    """Alternating vertex/edge sequence v0 e1 v1 ... el vl (length l >= 0)."""

    vertices: tuple[VertexId, ...]
    edges: tuple[EdgeId, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("a path on l edges must list l+1 vertices")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def endpoints(self) -> tuple[VertexId, VertexId]:
        return self.vertices[0], self.vertices[-1]

    def reversed(self) -> "SignedPath":
        return SignedPath(self.vertices[::-1], self.edges[::-1])

    def canonical(self) -> "SignedPath":
        """The path or its reversal, whichever starts at the smaller endpoint.

        Ties (equal endpoints cannot happen; equal is impossible for valid
        paths of length >= 1) fall back to lexicographic comparison so that
        canonicalization is a total, idempotent rule even on weird inputs.
        """
        rev = self.reversed()
        if (self.vertices, self.edges) <= (rev.vertices, rev.edges):
            return self
        return rev


def is_valid_path(g: BidirectedMultigraph, p: SignedPath) -> bool:
    """True iff p is a path of g with signs alternating at internal vertices.

    Malformed sequences (unknown ids, edges not joining their neighbours,
    repeated vertices) return False rather than raising.
    """
    vs, es = p.vertices, p.edges
    if len(set(vs)) != len(vs):
        return False
    if any(not g.has_vertex(v) for v in vs):
        return False
    if any(not g.has_edge(e) for e in es):
        return False
    for i, e in enumerate(es):
        if not g.edge(e).joins(vs[i], vs[i + 1]):
            return False
    for i in range(1, len(es)):
        v = vs[i]
        if g.sign(v, es[i - 1]) == g.sign(v, es[i]):
            return False
    return True


def is_x_path(g: BidirectedMultigraph, x: Iterable[VertexId], p: SignedPath) -> bool:
    """True iff p is a non-trivial valid path meeting X exactly at its ends."""
    xs = frozenset(x)
    if p.length < 1 or not is_valid_path(g, p):
        return False
    if p.vertices[0] not in xs or p.vertices[-1] not in xs:
        return False
    return all(v not in xs for v in p.vertices[1:-1])


@dataclass(frozen=True)
class Multigraph:
    """A plain undirected multigraph: dense vertices, edge id = list index."""

    vertex_count: int
    endpoints: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (edge id, other endpoint), in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.vertex_count)]
        for eid, (u, v) in enumerate(self.endpoints):
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        return adj


def weak_components(h: Multigraph) -> list[list[int]]:
    """Connected components of h as sorted vertex lists, ordered by minimum id.

    Isolated vertices form singleton components.
    """
    parent = list(range(h.vertex_count))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, v in h.endpoints:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(h.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values(), key=lambda c: c[0])


@dataclass(frozen=True)
class RestrictedGraph:
    """The sign-filtered subgraph used by the dual bound.

    Keeps the full vertex set of the host and exactly those edges all of
    whose ends v satisfy: v outside S∪T, or v in S∖T with sign -, or v in
    T∖S with sign +. Every vertex of S∩T is therefore isolated here.
    """

    vertex_count: int
    kept_edges: tuple[EdgeId, ...]
    kept_endpoints: tuple[tuple[VertexId, VertexId], ...]

    def as_multigraph(self) -> Multigraph:
        return Multigraph(self.vertex_count, self.kept_endpoints)

    def components(self) -> list[list[int]]:
        return weak_components(self.as_multigraph())


def restrict(
    g: BidirectedMultigraph,
    s: Iterable[VertexId],
    t: Iterable[VertexId],
) -> RestrictedGraph:
    """The restricted multigraph keeping edges whose every end passes the keep rule."""
    ss = g.check_vertex_set(s)
    ts = g.check_vertex_set(t)

    def end_ok(v: VertexId, sign: Sign) -> bool:
        in_s, in_t = v in ss, v in ts
        if not in_s and not in_t:
            return True
        if in_s and not in_t:
            return sign is MINUS
        if in_t and not in_s:
            return sign is PLUS
        return False

    kept: list[EdgeId] = []
    ends: list[tuple[VertexId, VertexId]] = []
    for eid in range(g.edge_count):
        e = g.edge(eid)
        if end_ok(e.u, e.sign_u) and end_ok(e.v, e.sign_v):
            kept.append(eid)
            ends.append((e.u, e.v))
    return RestrictedGraph(g.vertex_count, tuple(kept), tuple(ends))


def dual_value(
    g: BidirectedMultigraph,
    x: Iterable[VertexId],
    s: Iterable[VertexId],
    t: Iterable[VertexId],
) -> int:
    """|S∩T| plus, per component C of the restricted graph, floor(|V(C)∩(X∪S∪T)|/2).

    Requires X∩S = X∩T; singleton components of S∩T vertices contribute 0.
    """
    xs = g.check_vertex_set(x)
    ss = g.check_vertex_set(s)
    ts = g.check_vertex_set(t)
    if xs & ss != xs & ts:
        raise SideConditionViolated("X ∩ S must equal X ∩ T")
    marked = xs | ss | ts
    total = len(ss & ts)
    for comp in restrict(g, ss, ts).components():
        total += sum(1 for v in comp if v in marked) // 2
    return total


def delete_vertices(
    g: BidirectedMultigraph, ys: Iterable[VertexId]
) -> tuple[BidirectedMultigraph, dict[VertexId, VertexId]]:
    """The submultigraph g - Y, plus the old-id -> new-id map for survivors."""
    dropped = g.check_vertex_set(ys)
    out = BidirectedMultigraph()
    remap: dict[VertexId, VertexId] = {}
    for v in g.vertices():
        if v not in dropped:
            remap[v] = out.add_vertex()
    for eid in range(g.edge_count):
        e = g.edge(eid)
        if e.u in remap and e.v in remap:
            out.add_edge(remap[e.u], e.sign_u, remap[e.v], e.sign_v)
    return out, remap


def from_digraph(
    vertex_count: int, arcs: Sequence[tuple[int, int]]
) -> BidirectedMultigraph:
    """Encode a loop-free directed multigraph: each arc u->v gets sign - at u, + at v."""
    g = BidirectedMultigraph()
    g.add_vertices(vertex_count)
    for u, v in arcs:
        g.add_edge(u, MINUS, v, PLUS)
    return g


def from_undirected(h: Multigraph) -> BidirectedMultigraph:
    """Encode a loop-free undirected multigraph.

    Each edge {u, v} becomes two edges: one with sign - at u and + at v,
    one with the signs swapped, so both traversal directions alternate.
    """
    g = BidirectedMultigraph()
    g.add_vertices(h.vertex_count)
    for u, v in h.endpoints:
        g.add_edge(u, MINUS, v, PLUS)
        g.add_edge(u, PLUS, v, MINUS)
    return g
