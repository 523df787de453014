import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import graph_and_divisor, vertex_subsets
from vreduced.dhar import dhar_decomposition, is_V_reduced, mu_vector
from vreduced.divisor import Divisor, degree, fire_set, is_effective_away_from
from vreduced.errors import EmptyVertexSet, NotEffectiveAwayFrom
from vreduced.oracle import brute_is_V_reduced, burning_dhar_singleton


def test_doubled_triangle_pair_reduced(tri):
    r = dhar_decomposition(tri, Divisor(tri, (2, 2, 2)), {"v1", "v2"})
    assert r.w_dhar == frozenset()
    assert r.to_json() == {"chain": [["v1", "v2"], ["v1", "v2", "v3"]], "w_dhar": []}


def test_whole_vertex_set(tri):
    r = dhar_decomposition(tri, Divisor(tri, (-5, 1, 1)), tri.vertices)
    assert r.chain == (frozenset(tri.vertices),)
    assert r.w_dhar == frozenset()


def test_dhar_set_of_single_debt(tri):
    r = dhar_decomposition(tri, Divisor(tri, (2, 2, -1)), {"v3"})
    assert r.w_dhar == {"v1", "v2"}
    assert r.chain == ({"v3"},)


def test_preconditions(tri):
    with pytest.raises(EmptyVertexSet):
        dhar_decomposition(tri, Divisor(tri, (2, 2, 2)), set())
    with pytest.raises(NotEffectiveAwayFrom) as info:
        dhar_decomposition(tri, Divisor(tri, (2, -2, -1)), {"v3"})
    assert info.value.offending == ["v2"]
    with pytest.raises(EmptyVertexSet):
        is_V_reduced(tri, Divisor(tri, (2, 2, 2)), set())


def test_is_V_reduced_examples(tri):
    assert is_V_reduced(tri, Divisor(tri, (2, 2, 2)), {"v1", "v2"})
    assert is_V_reduced(tri, Divisor(tri, (-2, 2, 2)), {"v1", "v2"})
    assert not is_V_reduced(tri, Divisor(tri, (2, 2, -1)), {"v3"})
    # not effective away from the set: a plain False
    assert not is_V_reduced(tri, Divisor(tri, (2, 2, -1)), {"v1"})


def test_mu_vector(tri, dpath):
    assert mu_vector(tri, Divisor(tri, (2, 2, -1)), {"v3"}) == [-1, 4]
    assert mu_vector(tri, Divisor(tri, (2, 2, -1)), tri.vertices) == [3]
    assert mu_vector(dpath, Divisor(dpath, (1, 3, 2)), {"v1"}) == [1, 3, 2]


@st.composite
def reduced_instances(draw):
    g, d = draw(graph_and_divisor(lo=-3, hi=3, max_vertices=6, max_extra=4))
    vs = draw(vertex_subsets(g))
    vals = tuple(x if v in vs else abs(x) for v, x in d.items())
    return g, Divisor(g, vals), vs


@given(reduced_instances())
def test_agrees_with_definition(inst):
    g, d, vs = inst
    assert is_V_reduced(g, d, vs) == brute_is_V_reduced(g, d, vs)


@given(reduced_instances())
def test_dhar_invariants(inst):
    g, d, vs = inst
    r = dhar_decomposition(g, d, vs)
    assert r.chain[0] == vs
    assert all(a < b for a, b in zip(r.chain, r.chain[1:]))
    assert r.w_dhar == frozenset(g.vertices) - r.chain[-1]
    assert not r.w_dhar & vs
    assert is_effective_away_from(fire_set(g, d, r.w_dhar), vs)


@given(reduced_instances(), st.data())
def test_reducedness_is_monotone_in_the_set(inst, data):
    g, d, vs = inst
    bigger = vs | data.draw(vertex_subsets(g, min_size=0))
    assume(is_effective_away_from(d, bigger))
    if is_V_reduced(g, d, vs):
        assert is_V_reduced(g, d, bigger)


@given(graph_and_divisor(lo=0, hi=4, max_vertices=6), st.data())
def test_singleton_matches_burning(gd, data):
    g, d = gd
    v = data.draw(st.sampled_from(g.vertices))
    vals = tuple(-3 if u == v else x for u, x in d.items())
    d = Divisor(g, vals)
    assert dhar_decomposition(g, d, {v}).w_dhar == burning_dhar_singleton(g, d, v)


@given(reduced_instances())
def test_firing_the_dhar_set_raises_mu(inst):
    g, d, vs = inst
    r = dhar_decomposition(g, d, vs)
    assume(r.w_dhar)
    after = fire_set(g, d, r.w_dhar)
    assert mu_vector(g, after, vs) > mu_vector(g, d, vs)
    assert sum(mu_vector(g, after, vs)) == degree(d)
