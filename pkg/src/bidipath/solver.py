"""Maximum disjoint X-path packing with a dual certificate and hitting sets.

The pipeline: build the auxiliary graph, grow a maximum matching from the
base matching, read the packing size off the matching surplus, extract the
paths from the alternating components of the two matchings' union, and
translate the Tutte-Berge witness of the auxiliary graph into a vertex-set
pair (S, T) whose dual bound equals the packing size. When fewer than k
paths exist, a leave-one-out selection over the restricted graph's
components yields a hitting set of size at most 2k-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .auxiliary import (
    AlternatingPath,
    AuxVertex,
    build_auxiliary,
    project_path,
)
from .core import (
    BidirectedMultigraph,
    SignedPath,
    VertexId,
    dual_value,
    restrict,
)
from .errors import (
    InternalDualityMismatch,
    InvalidK,
    SideConditionViolated,
)
from .matching import (
    alternating_components,
    components_without,
    maximum_matching,
    tutte_berge_witness,
)


@dataclass(frozen=True)
class PackingResult:
    """k pairwise disjoint X-paths; k is the maximum, certified by the dual."""

    k: int
    paths: tuple[SignedPath, ...]


@dataclass(frozen=True)
class Certificate:
    """A pair (S, T) with X∩S = X∩T whose dual bound equals the packing size."""

    s: frozenset[VertexId]
    t: frozenset[VertexId]
    value: int


@dataclass(frozen=True)
class HittingSet:
    """A vertex set of size at most 2k-2 meeting every X-path."""

    y: frozenset[VertexId]
    k: int


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def max_disjoint_x_paths(g: BidirectedMultigraph, x: Iterable[VertexId]) -> PackingResult:
    """The maximum number of pairwise disjoint X-paths, with the paths."""
    xs = g.check_vertex_set(x)
    aux = build_auxiliary(g, xs)
    matching = maximum_matching(aux.graph, seed=aux.base_matching)
    k = len(matching) - len(aux.base_matching)
    candidates: list[SignedPath] = []
    for comp in alternating_components(aux.graph, aux.base_matching, matching):
        if comp.kind != "path" or not comp.edges:
            continue
        first = aux.aux_vertices[comp.vertices[0]]
        last = aux.aux_vertices[comp.vertices[-1]]
        if not (first.is_original and last.is_original):
            continue
        lifted = AlternatingPath(comp.vertices, comp.edges)
        candidates.append(project_path(aux, lifted).canonical())
    if len(candidates) < k:
        raise InternalDualityMismatch(
            f"matching surplus {k} exceeds the {len(candidates)} extracted paths"
        )
    candidates.sort(key=lambda p: (p.vertices[0], p.vertices[-1], p.vertices, p.edges))
    return PackingResult(k, tuple(candidates[:k]))


def certificate(g: BidirectedMultigraph, x: Iterable[VertexId]) -> Certificate:
    """A dual pair (S, T) attaining the packing size.

    The Tutte-Berge witness U of the auxiliary graph is translated by copy
    membership: T collects vertices whose copy 1 lies in U, S those whose
    copy 2 does (an X-vertex, owning a single copy, lands in both or
    neither). The translation satisfies U = p(T x {1}) ∪ p(S x {2}).
    """
    xs = g.check_vertex_set(x)
    aux = build_auxiliary(g, xs)
    witness = tutte_berge_witness(aux.graph)
    s, t = set(), set()
    for v in g.vertices():
        if aux.p(v, 1) in witness.u:
            t.add(v)
        if aux.p(v, 2) in witness.u:
            s.add(v)
    k = witness.value - len(aux.base_matching)
    value = dual_value(g, xs, s, t)
    if value != k:
        raise InternalDualityMismatch(
            f"translated dual bound {value} differs from packing size {k}"
        )
    return Certificate(frozenset(s), frozenset(t), value)


def verify_certificate(
    g: BidirectedMultigraph,
    x: Iterable[VertexId],
    cert: Certificate,
    claimed_k: int,
) -> VerificationResult:
    """Recheck a certificate without solving anything."""
    try:
        xs = g.check_vertex_set(x)
        ss = g.check_vertex_set(cert.s)
        ts = g.check_vertex_set(cert.t)
    except Exception:
        return VerificationResult(False, "unknown-vertex")
    if xs & ss != xs & ts:
        return VerificationResult(False, "side-condition-violated")
    actual = dual_value(g, xs, ss, ts)
    if actual != cert.value:
        return VerificationResult(False, "value-mismatch")
    if cert.value != claimed_k:
        return VerificationResult(False, "k-mismatch")
    return VerificationResult(True)


def gamma_image(
    g: BidirectedMultigraph,
    x: Iterable[VertexId],
    s: Iterable[VertexId],
    t: Iterable[VertexId],
    v: VertexId,
) -> frozenset[AuxVertex]:
    """The auxiliary-vertex image of v under the five-case copy map."""
    xs = g.check_vertex_set(x)
    ss = g.check_vertex_set(s)
    ts = g.check_vertex_set(t)
    if xs & ss != xs & ts:
        raise SideConditionViolated("X ∩ S must equal X ∩ T")
    g.check_vertex_set([v])
    in_s, in_t = v in ss, v in ts
    if in_s and in_t:
        return frozenset()
    if in_s:
        return frozenset({AuxVertex(v, 1)})
    if in_t:
        return frozenset({AuxVertex(v, 2)})
    if v in xs:
        return frozenset({AuxVertex(v, 0)})
    return frozenset({AuxVertex(v, 1), AuxVertex(v, 2)})


def verify_component_correspondence(
    g: BidirectedMultigraph,
    x: Iterable[VertexId],
    s: Iterable[VertexId],
    t: Iterable[VertexId],
) -> bool:
    """Check that the copy map carries restricted-graph components onto the
    components of the auxiliary graph minus the translated witness set,
    including the per-component cardinality identity."""
    xs = g.check_vertex_set(x)
    ss = g.check_vertex_set(s)
    ts = g.check_vertex_set(t)
    if xs & ss != xs & ts:
        raise SideConditionViolated("X ∩ S must equal X ∩ T")
    aux = build_auxiliary(g, xs)
    u_aux = {aux.p(v, 1) for v in ts} | {aux.p(v, 2) for v in ss}
    aux_families = {
        frozenset(comp) for comp in components_without(aux.graph, u_aux)
    }
    marked = xs | ss | ts
    both = ss & ts
    restricted_families: set[frozenset[int]] = set()
    count = 0
    for comp in restrict(g, ss, ts).components():
        if len(comp) == 1 and comp[0] in both:
            continue
        count += 1
        image: set[int] = set()
        for v in comp:
            image.update(aux.index[a] for a in gamma_image(g, xs, ss, ts, v))
        inside = sum(1 for v in comp if v in marked)
        if len(image) != inside + 2 * (len(comp) - inside):
            return False
        restricted_families.add(frozenset(image))
    return restricted_families == aux_families and count == len(aux_families)


def hitting_set(
    g: BidirectedMultigraph, x: Iterable[VertexId], k: int
) -> HittingSet | PackingResult:
    """Either k disjoint X-paths (as the full optimal packing) or a vertex
    set Y with |Y| <= 2k-2 meeting every X-path.

    Y combines S∩T with, per restricted component, all but the minimum-id
    member of its marked vertices.
    """
    if k < 1:
        raise InvalidK("the hitting-set bound 2k-2 requires k >= 1")
    xs = g.check_vertex_set(x)
    packing = max_disjoint_x_paths(g, xs)
    if packing.k >= k:
        return packing
    cert = certificate(g, xs)
    marked = xs | cert.s | cert.t
    y = set(cert.s & cert.t)
    for comp in restrict(g, cert.s, cert.t).components():
        members = [v for v in comp if v in marked]
        y.update(members[1:])
    if len(y) > 2 * k - 2:
        raise InternalDualityMismatch(
            f"hitting set of size {len(y)} exceeds the bound {2 * k - 2}"
        )
    return HittingSet(frozenset(y), k)


def has_x_path(
    g: BidirectedMultigraph,
    x: Iterable[VertexId],
    avoid: Iterable[VertexId] = (),
) -> bool:
    """True iff at least one X-path exists, avoiding the given vertices.

    Implemented as a sign-alternating depth-first search from X, entirely
    independent of the matching pipeline, so it can audit hitting sets.
    Branches from which no unvisited X-vertex is even sign-blind reachable
    are pruned; that keeps the search fast on dense negative instances.
    """
    xs = g.check_vertex_set(x)
    banned = g.check_vertex_set(avoid)
    if len(xs - banned) < 2:
        return False  # both endpoints lie in X and are distinct

    def x_reachable(frm: VertexId, on_path: set[VertexId]) -> bool:
        seen = {frm}
        stack = [frm]
        while stack:
            v = stack.pop()
            for eid in g.incident_edges(v):
                w = g.edge(eid).other(v)
                if w in banned or w in on_path or w in seen:
                    continue
                if w in xs:
                    return True
                seen.add(w)
                stack.append(w)
        return False

    def extend(v: VertexId, incoming, on_path: set[VertexId]) -> bool:
        if not x_reachable(v, on_path):
            return False
        for eid in g.incident_edges(v):
            if incoming is not None and g.sign(v, eid) == incoming:
                continue
            w = g.edge(eid).other(v)
            if w in banned or w in on_path:
                continue
            if w in xs:
                return True
            on_path.add(w)
            if extend(w, g.sign(w, eid), on_path):
                return True
            on_path.remove(w)
        return False

    return any(
        extend(start, None, {start}) for start in sorted(xs) if start not in banned
    )
