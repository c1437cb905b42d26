"""Maximum matching in general multigraphs, with a certified dual witness.

The matcher is Edmonds' blossom-shrinking search over the simple support of
the input (parallel edges are collapsed to their lowest-id representative;
a matching never uses two parallel edges). After the matching is maximum,
the failed searches from the remaining exposed vertices yield the
Gallai-Edmonds partition, whose A-set attains the Tutte-Berge minimum.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .core import Multigraph, weak_components
from .errors import InvalidSeed


@dataclass(frozen=True)
class GallaiEdmonds:
    """Canonical partition: d is missed by some maximum matching, a = N(d) - d,
    c is everything else."""

    d: frozenset[int]
    a: frozenset[int]
    c: frozenset[int]


@dataclass(frozen=True)
class TutteBergeWitness:
    """A vertex set attaining min |U| + sum floor(|C|/2) over components of H - U."""

    u: frozenset[int]
    value: int


def is_matching(h: Multigraph, edges: Iterable[int]) -> bool:
    """True iff the edge ids exist in h and no two of them share an endpoint."""
    seen: set[int] = set()
    for eid in edges:
        if not 0 <= eid < h.edge_count:
            return False
        u, v = h.endpoints[eid]
        if u in seen or v in seen:
            return False
        seen.add(u)
        seen.add(v)
    return True


def components_without(h: Multigraph, removed: Iterable[int]) -> list[list[int]]:
    """Components of h after deleting a vertex set, as sorted lists by min id."""
    gone = set(removed)
    alive = [v for v in range(h.vertex_count) if v not in gone]
    relabel = {v: i for i, v in enumerate(alive)}
    kept = tuple(
        (relabel[u], relabel[v])
        for u, v in h.endpoints
        if u not in gone and v not in gone
    )
    sub = Multigraph(len(alive), kept)
    return [[alive[i] for i in comp] for comp in weak_components(sub)]


def tutte_berge_value(h: Multigraph, u: Iterable[int]) -> int:
    """|U| + sum floor(|C|/2) over the components C of h - U."""
    us = set(u)
    return len(us) + sum(len(c) // 2 for c in components_without(h, us))


class _Matcher:
    """One blossom-search state over the simple support of a multigraph.

    Scanning is in ascending representative-edge-id order, so the matching,
    the augmenting paths, and the final forest labels are reproducible.
    """

    def __init__(self, h: Multigraph):
        self.h = h
        self.n = h.vertex_count
        rep: dict[tuple[int, int], int] = {}
        for eid, (u, v) in enumerate(h.endpoints):
            key = (u, v) if u < v else (v, u)
            rep.setdefault(key, eid)
        self.rep = rep
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (u, v), eid in sorted(rep.items(), key=lambda kv: kv[1]):
            adj[u].append((eid, v))
            adj[v].append((eid, u))
        for lst in adj:
            lst.sort()
        self.adj = adj
        self.match = [-1] * self.n
        self.pair_edge: dict[tuple[int, int], int] = {}

    def seed(self, edges: Iterable[int]) -> None:
        for eid in sorted(edges):
            u, v = self.h.endpoints[eid]
            self.match[u] = v
            self.match[v] = u
            self.pair_edge[(u, v) if u < v else (v, u)] = eid

    def _set_pair(self, u: int, v: int) -> None:
        self.match[u] = v
        self.match[v] = u
        key = (u, v) if u < v else (v, u)
        self.pair_edge[key] = self.rep[key]

    def _lca(self, a: int, b: int, base: list[int], parent: list[int]) -> int:
        seen = [False] * self.n
        v = a
        while True:
            v = base[v]
            seen[v] = True
            if self.match[v] == -1:
                break
            v = parent[self.match[v]]
        v = b
        while True:
            v = base[v]
            if seen[v]:
                return v
            v = parent[self.match[v]]

    def _mark_path(
        self,
        v: int,
        b: int,
        child: int,
        blossom: list[bool],
        base: list[int],
        parent: list[int],
    ) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[self.match[v]]] = True
            parent[v] = child
            child = self.match[v]
            v = parent[self.match[v]]

    def search(self, root: int, augment: bool = True) -> tuple[bool, list[bool], list[int]]:
        """Grow an alternating forest from one exposed root.

        With augment=True, flips the matching along the first augmenting path
        found. Returns (augmented, even-flags, odd-parents); after a failed
        search the even flags mark exactly the vertices reachable from the
        root by even-length alternating paths.
        """
        even = [False] * self.n
        parent = [-1] * self.n
        base = list(range(self.n))
        even[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for _eid, to in self.adj[v]:
                if base[v] == base[to] or self.match[v] == to:
                    continue
                if to == root or (self.match[to] != -1 and parent[self.match[to]] != -1):
                    # Even meets even: shrink the blossom around their cycle.
                    curbase = self._lca(v, to, base, parent)
                    blossom = [False] * self.n
                    self._mark_path(v, curbase, to, blossom, base, parent)
                    self._mark_path(to, curbase, v, blossom, base, parent)
                    for i in range(self.n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not even[i]:
                                even[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if self.match[to] == -1:
                        if not augment:
                            raise AssertionError(
                                "augmenting path found while probing a maximum matching"
                            )
                        self._augment(to, parent)
                        return True, even, parent
                    even[self.match[to]] = True
                    queue.append(self.match[to])
        return False, even, parent

    def _augment(self, to: int, parent: list[int]) -> None:
        v = to
        while v != -1:
            pv = parent[v]
            next_v = self.match[pv]
            self._set_pair(pv, v)
            v = next_v

    def run(self) -> None:
        for v in range(self.n):
            if self.match[v] == -1:
                self.search(v)

    def matched_edges(self) -> frozenset[int]:
        out = set()
        for v in range(self.n):
            w = self.match[v]
            if w > v:
                out.add(self.pair_edge[(v, w)])
        return frozenset(out)


def maximum_matching(h: Multigraph, seed: Iterable[int] = ()) -> frozenset[int]:
    """A maximum-cardinality matching of h, grown from the given seed matching.

    Edge ids in the result are ids of h; parallel edges are represented by
    their lowest id except where the seed supplied another parallel copy.
    """
    seed_edges = frozenset(seed)
    if not is_matching(h, seed_edges):
        raise InvalidSeed("seed is not a matching of the host graph")
    matcher = _Matcher(h)
    matcher.seed(seed_edges)
    matcher.run()
    return matcher.matched_edges()


def gallai_edmonds(h: Multigraph) -> GallaiEdmonds:
    """The canonical partition (D, A, C) of h."""
    matcher = _Matcher(h)
    matcher.run()
    missed: set[int] = set()
    for root in range(matcher.n):
        if matcher.match[root] == -1:
            _, even, _ = matcher.search(root, augment=False)
            missed.update(v for v in range(matcher.n) if even[v])
    boundary = set()
    for v in missed:
        boundary.update(to for _eid, to in matcher.adj[v])
    a = frozenset(boundary - missed)
    d = frozenset(missed)
    c = frozenset(range(matcher.n)) - d - a
    return GallaiEdmonds(d, a, c)


def tutte_berge_witness(h: Multigraph) -> TutteBergeWitness:
    """The A-set of the Gallai-Edmonds partition, which attains the minimum."""
    decomposition = gallai_edmonds(h)
    value = tutte_berge_value(h, decomposition.a)
    return TutteBergeWitness(decomposition.a, value)


@dataclass(frozen=True)
class AlternatingComponent:
    """One component of the union of two matchings: a path or an even cycle.

    For a cycle the closing edge (last entry) joins the last vertex back to
    the first; a path lists one more vertex than edges, and an isolated
    vertex is a length-0 path.
    """

    kind: str  # "path" or "cycle"
    vertices: tuple[int, ...]
    edges: tuple[int, ...]


def alternating_components(
    h: Multigraph, m0: Iterable[int], m: Iterable[int]
) -> list[AlternatingComponent]:
    """Decompose the subgraph (V(h), M0 ∪ M) into explicit paths and cycles.

    Edges present in both matchings come out as single-edge path components.
    Components are ordered by their minimum vertex id; paths start at their
    lower-id endpoint, cycles at their minimum vertex.
    """
    m0_set = frozenset(m0)
    m_set = frozenset(m)
    for label, edges in (("m0", m0_set), ("m", m_set)):
        if not is_matching(h, edges):
            raise InvalidSeed(f"{label} is not a matching of the host graph")
    union = sorted(m0_set | m_set)
    adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(h.vertex_count)}
    for eid in union:
        u, v = h.endpoints[eid]
        adj[u].append((eid, v))
        adj[v].append((eid, u))

    seen: set[int] = set()
    out: list[AlternatingComponent] = []

    def walk(start: int) -> AlternatingComponent:
        verts = [start]
        edges: list[int] = []
        seen.add(start)
        prev_edge = -1
        v = start
        while True:
            step = [(eid, w) for eid, w in adj[v] if eid != prev_edge]
            if not step:
                return AlternatingComponent("path", tuple(verts), tuple(edges))
            eid, w = min(step)
            edges.append(eid)
            if w == start:
                return AlternatingComponent("cycle", tuple(verts), tuple(edges))
            verts.append(w)
            seen.add(w)
            prev_edge = eid
            v = w

    for v in range(h.vertex_count):
        if v in seen:
            continue
        if len(adj[v]) <= 1:
            out.append(walk(v))
    for v in range(h.vertex_count):
        if v not in seen:
            out.append(walk(v))
    out.sort(key=lambda comp: min(comp.vertices))
    return out
