"""Property-based checks of the structural invariants.

Codes are drawn as random subsets of Z_n for 7 <= n <= 40; every property
here is exact (no tolerances), so shrinking produces readable counterexamples.
"""

import random

from hypothesis import given, settings, strategies as st

from circodes import CirculantGraph, Code, Kind
from circodes.codes import valid_mask

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")


@st.composite
def graph_and_code(draw, min_n=7, max_n=40, nonempty=False):
    n = draw(st.integers(min_n, max_n))
    lo = 1 if nonempty else 0
    members = draw(st.sets(st.integers(0, n - 1), min_size=lo, max_size=n))
    return CirculantGraph(n), frozenset(members)


@st.composite
def dominating_code(draw):
    """Random dominating code: a random subset padded greedily to dominate."""
    n = draw(st.integers(7, 40))
    g = CirculantGraph(n)
    members = set(draw(st.sets(st.integers(0, n - 1), max_size=n)))
    rng = random.Random(draw(st.integers(0, 2**32)))
    code = Code(g, members)
    while True:
        result = code.is_dominating()
        if result.ok:
            return code
        u = result.witness
        members.add(rng.choice(sorted(g.closed_neighborhood(u))))
        code = Code(g, members)


@given(dominating_code())
def test_sum_of_shares_equals_n(code):
    assert code.sum_of_shares() == code.graph.n


@given(graph_and_code())
def test_implication_chain(gc):
    g, members = gc
    code = Code(g, members)
    if code.is_identifying():
        assert code.is_locating()
    if code.is_locating():
        assert code.is_dominating()


@given(graph_and_code(), st.integers(0, 100))
def test_rotation_invariance(gc, c):
    g, members = gc
    rotated = frozenset((v + c) % g.n for v in members)
    for kind in Kind:
        assert Code(g, members).verify(kind).ok == \
               Code(g, rotated).verify(kind).ok


@given(graph_and_code())
def test_reflection_invariance(gc):
    g, members = gc
    mirrored = frozenset((-v) % g.n for v in members)
    for kind in Kind:
        assert Code(g, members).verify(kind).ok == \
               Code(g, mirrored).verify(kind).ok


@given(graph_and_code())
def test_shadow_locality(gc):
    g, members = gc
    code = Code(g, members)
    for u in range(g.n):
        for s in code.shadow(u):
            d = abs(s - u)
            assert min(d, g.n - d) <= 3


@given(graph_and_code(nonempty=True))
def test_distant_pairs_never_collide(gc):
    g, members = gc
    code = Code(g, members)
    for u in range(g.n):
        su = code.shadow(u)
        if not su:
            continue
        for v in range(u + 1, g.n):
            d = min(v - u, g.n - (v - u))
            if d > 6 and code.shadow(v):
                assert code.shadow(v) != su


@given(graph_and_code())
def test_fast_verifier_matches_reference(gc):
    g, members = gc
    code = Code(g, members)
    for kind in Kind:
        assert valid_mask(g.n, code.mask, g._closed_masks, 6, kind) == \
               code.verify(kind).ok


@given(st.integers(7, 40), st.integers(0, 39), st.integers(0, 6))
def test_ball_growth(n, u, r):
    g = CirculantGraph(n)
    u %= n
    assert g.ball(u, r) <= g.ball(u, r + 1)
    if r >= n:  # diameter is well below n
        assert g.ball(u, r) == frozenset(range(n))


@given(st.integers(7, 40), st.integers(0, 39))
def test_neighborhood_rotation_equivariance(n, u):
    g = CirculantGraph(n)
    u %= n
    shifted = frozenset((x + 1) % n for x in g.closed_neighborhood(u))
    assert g.closed_neighborhood((u + 1) % n) == shifted


@given(st.integers(7, 40), st.integers(0, 39), st.integers(0, 39))
def test_adjacency_symmetric(n, u, v):
    g = CirculantGraph(n)
    u, v = u % n, v % n
    assert g.is_adjacent(u, v) == g.is_adjacent(v, u)


@given(graph_and_code(min_n=7, max_n=20))
def test_witnesses_are_verifiable(gc):
    g, members = gc
    code = Code(g, members)
    for kind in Kind:
        result = code.verify(kind)
        if result.ok:
            continue
        w = result.witness
        if isinstance(w, tuple):
            u, v = w
            assert code.shadow(u) == code.shadow(v)
        else:
            assert code.shadow(w) == frozenset()
