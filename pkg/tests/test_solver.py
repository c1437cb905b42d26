"""Packing, certificate, correspondence, hitting set, and the audit search."""

import random

import pytest

from bidipath import (
    MINUS,
    PLUS,
    AuxVertex,
    BidirectedMultigraph,
    PackingResult,
    SignedPath,
    certificate,
    delete_vertices,
    dual_value,
    gamma_image,
    has_x_path,
    hitting_set,
    is_x_path,
    max_disjoint_x_paths,
    verify_certificate,
    verify_component_correspondence,
)
from bidipath.errors import InvalidK, SideConditionViolated, UnknownVertex
from bidipath.oracle import brute_dual_value, enumerate_x_paths
from helpers import complete_all_minus, random_admissible_pair, random_instance


def single_x_edge():
    g = BidirectedMultigraph()
    a, b = g.add_vertices(2)
    g.add_edge(a, MINUS, b, PLUS)
    return g, {a, b}


def test_packing_empty_x():
    g = complete_all_minus(4)
    result = max_disjoint_x_paths(g, ())
    assert result.k == 0
    assert result.paths == ()


def test_packing_k5():
    g = complete_all_minus(5)
    result = max_disjoint_x_paths(g, range(5))
    assert result.k == 2
    assert len(result.paths) == 2
    used = set()
    for p in result.paths:
        assert is_x_path(g, range(5), p)
        assert not (set(p.vertices) & used)
        used |= set(p.vertices)


def test_packing_single_edge():
    g, x = single_x_edge()
    result = max_disjoint_x_paths(g, x)
    assert result.k == 1
    assert result.paths[0].vertices == (0, 1)


def test_packing_unknown_vertex():
    g = complete_all_minus(3)
    with pytest.raises(UnknownVertex):
        max_disjoint_x_paths(g, {5})


def test_packing_paths_are_valid_and_disjoint_on_random_instances():
    for seed in range(150):
        inst = random_instance(seed)
        result = max_disjoint_x_paths(inst.graph, inst.x)
        used: set[int] = set()
        for p in result.paths:
            assert is_x_path(inst.graph, inst.x, p)
            assert not (set(p.vertices) & used)
            used |= set(p.vertices)
        assert len(result.paths) == result.k


def test_certificate_empty_x():
    g = complete_all_minus(3)
    cert = certificate(g, ())
    assert cert.value == 0
    assert cert.s & frozenset() == cert.t & frozenset()


def test_certificate_k5():
    g = complete_all_minus(5)
    cert = certificate(g, range(5))
    assert cert.s == cert.t == frozenset()
    assert cert.value == 2


def test_verify_certificate_round_trip_and_perturbations():
    g = complete_all_minus(5)
    x = range(5)
    cert = certificate(g, x)
    assert verify_certificate(g, x, cert, 2)
    wrong_value = type(cert)(cert.s, cert.t, cert.value + 1)
    check = verify_certificate(g, x, wrong_value, 2)
    assert not check and check.reason == "value-mismatch"
    bad_sides = type(cert)(frozenset({0}), frozenset({1}), cert.value)
    check = verify_certificate(g, x, bad_sides, 2)
    assert not check and check.reason == "side-condition-violated"
    check = verify_certificate(g, x, cert, 3)
    assert not check and check.reason == "k-mismatch"


def test_gamma_image_five_cases():
    g = BidirectedMultigraph()
    g.add_vertices(5)
    x = {0, 3}
    s = {0, 1}
    t = {0, 2}
    assert gamma_image(g, x, s, t, 0) == frozenset()
    assert gamma_image(g, x, s, t, 1) == frozenset({AuxVertex(1, 1)})
    assert gamma_image(g, x, s, t, 2) == frozenset({AuxVertex(2, 2)})
    assert gamma_image(g, x, s, t, 3) == frozenset({AuxVertex(3, 0)})
    assert gamma_image(g, x, s, t, 4) == frozenset(
        {AuxVertex(4, 1), AuxVertex(4, 2)}
    )


def test_gamma_image_side_condition():
    g = BidirectedMultigraph()
    g.add_vertices(2)
    with pytest.raises(SideConditionViolated):
        gamma_image(g, {0, 1}, {0}, {1}, 0)


def test_correspondence_with_empty_sets():
    for seed in range(40):
        inst = random_instance(seed, max_n=6, max_m=10)
        assert verify_component_correspondence(inst.graph, inst.x, (), ())


def test_correspondence_on_random_admissible_pairs():
    for seed in range(200):
        inst = random_instance(seed, max_n=6, max_m=10)
        rng = random.Random(seed * 31)
        s, t = random_admissible_pair(rng, inst.graph.vertex_count, inst.x)
        assert verify_component_correspondence(inst.graph, inst.x, s, t)


def test_hitting_set_k5_remark_instance():
    g = complete_all_minus(5)
    result = hitting_set(g, range(5), 3)
    assert not isinstance(result, PackingResult)
    assert len(result.y) == 4
    assert not has_x_path(g, range(5), avoid=result.y)


def test_hitting_set_returns_packing_when_enough_paths():
    g = complete_all_minus(5)
    result = hitting_set(g, range(5), 2)
    assert isinstance(result, PackingResult)
    assert result.k == 2


def test_hitting_set_empty_when_no_paths_at_k1():
    g = BidirectedMultigraph()
    g.add_vertices(3)
    result = hitting_set(g, {0, 1}, 1)
    assert result.y == frozenset()


def test_hitting_set_rejects_k_zero():
    g = complete_all_minus(3)
    with pytest.raises(InvalidK):
        hitting_set(g, range(3), 0)


def test_hitting_set_random_instances_audited_by_oracle():
    for seed in range(120):
        inst = random_instance(seed, max_n=8)
        g, x = inst.graph, inst.x
        k_opt = max_disjoint_x_paths(g, x).k
        for k in range(1, k_opt + 3):
            result = hitting_set(g, x, k)
            if isinstance(result, PackingResult):
                assert result.k >= k
            else:
                assert len(result.y) <= 2 * k - 2
                sub, remap = delete_vertices(g, result.y)
                remaining_x = {remap[v] for v in x if v in remap}
                assert enumerate_x_paths(sub, remaining_x, limit=50) == []


def test_has_x_path_edgeless():
    g = BidirectedMultigraph()
    g.add_vertices(2)
    assert not has_x_path(g, {0, 1})


def test_has_x_path_single_edge():
    g, x = single_x_edge()
    assert has_x_path(g, x)


def test_has_x_path_blocked_by_equal_signs():
    # both edges arrive at v with sign +, so no alternation is possible
    g = BidirectedMultigraph()
    x1, x2, v = g.add_vertices(3)
    g.add_edge(x1, MINUS, v, PLUS)
    g.add_edge(x2, MINUS, v, PLUS)
    assert not has_x_path(g, {x1, x2})
    # flipping one sign opens the alternating route
    g2 = BidirectedMultigraph()
    y1, y2, w = g2.add_vertices(3)
    g2.add_edge(y1, MINUS, w, PLUS)
    g2.add_edge(y2, MINUS, w, MINUS)
    assert has_x_path(g2, {y1, y2})


def test_weak_duality_on_small_instances():
    # every admissible (S, T) bounds the packing size from above
    for seed in range(40):
        inst = random_instance(seed, max_n=5, max_m=8)
        g, x = inst.graph, inst.x
        k = max_disjoint_x_paths(g, x).k
        rng = random.Random(seed)
        for _ in range(20):
            s, t = random_admissible_pair(rng, g.vertex_count, x)
            assert dual_value(g, x, s, t) >= k


def test_adding_an_edge_never_decreases_k():
    for seed in range(60):
        inst = random_instance(seed, max_n=6, max_m=8)
        g, x = inst.graph, inst.x
        if g.vertex_count < 2:
            continue
        before = max_disjoint_x_paths(g, x).k
        grown = BidirectedMultigraph()
        grown.add_vertices(g.vertex_count)
        for eid in range(g.edge_count):
            e = g.edge(eid)
            grown.add_edge(e.u, e.sign_u, e.v, e.sign_v)
        rng = random.Random(seed + 99)
        u = rng.randrange(g.vertex_count)
        v = rng.randrange(g.vertex_count - 1)
        if v >= u:
            v += 1
        grown.add_edge(u, rng.choice((MINUS, PLUS)), v, rng.choice((MINUS, PLUS)))
        assert max_disjoint_x_paths(grown, x).k >= before


def test_enlarging_y_never_creates_an_x_path():
    for seed in range(50):
        inst = random_instance(seed, max_n=6, max_m=10)
        g, x = inst.graph, inst.x
        result = hitting_set(g, x, 1)
        if isinstance(result, PackingResult):
            continue
        rng = random.Random(seed)
        y = set(result.y)
        assert not has_x_path(g, x, avoid=y)
        candidates = [v for v in g.vertices() if v not in y]
        rng.shuffle(candidates)
        for extra in candidates[:3]:
            y.add(extra)
            assert not has_x_path(g, x, avoid=y)


def test_certificate_matches_brute_dual_everywhere_it_applies():
    for seed in range(80):
        inst = random_instance(seed, max_n=6, max_m=10)
        g, x = inst.graph, inst.x
        cert = certificate(g, x)
        assert brute_dual_value(g, x, cert.s, cert.t) == cert.value
