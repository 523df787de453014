import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from strategies import graph_and_divisor, graphs, scripts
from vreduced.divisor import Divisor, canonical_divisor, linear_equivalence_witness, principal_divisor
from vreduced.errors import NotSpecialClass
from vreduced.graph import Graph
from vreduced.reduction import find_effective
from vreduced.uniform import (
    has_uniform_guarantee,
    is_quasi_uniform,
    is_semistable,
    is_uniform,
    quasi_uniform_bounds,
    quasi_uniform_representative,
    quasi_uniform_run,
    residual_bounded_representative,
    satisfies_residual_bounds,
    specialness,
    within_quasi_uniform_upper,
)


@pytest.fixture
def looped_path():
    return Graph.build(["v1", "v2", "v3"],
                       [("v1", "v2"), ("v1", "v2"), ("v2", "v3"), ("v2", "v3"), ("v2", "v2")])


def test_uniform_examples(tri, dpath):
    assert is_uniform(tri, Divisor(tri, (2, 2, 2)))
    assert is_uniform(tri, Divisor(tri, (0, 0, 0)))
    assert not is_uniform(tri, Divisor(tri, (0, 0, 3)))
    assert not is_uniform(dpath, Divisor(dpath, (1, 0, 0)))


def test_graph_classes(tri, dpath, looped_path):
    assert is_semistable(tri) and is_semistable(dpath)
    assert not is_semistable(Graph.build(["a", "b"], [("a", "b")]))
    assert is_semistable(Graph.build(["a", "b"], [("a", "b")], [1, 1]))
    assert not has_uniform_guarantee(tri)
    assert not has_uniform_guarantee(looped_path)
    assert has_uniform_guarantee(Graph.build(["a", "b"], [("a", "a"), ("a", "b")], {"a": 0, "b": 1}))


def test_bounds(tri, dpath, looped_path):
    assert quasi_uniform_bounds(tri) == (3, 3, 3)
    assert quasi_uniform_bounds(dpath) == (1, 3, 1)
    assert quasi_uniform_bounds(looped_path) == (1, 4, 1)
    assert within_quasi_uniform_upper(tri, Divisor(tri, (-5, 3, 3)))
    assert not is_quasi_uniform(tri, Divisor(tri, (-5, 3, 3)))


def test_specialness(tri):
    r = specialness(tri, Divisor(tri, (0, 0, 3)))
    assert r.is_special
    assert r.effective_rep == Divisor(tri, (0, 0, 3))
    assert r.effective_residual_rep == Divisor(tri, (0, 0, 3))
    r = specialness(tri, Divisor(tri, (0, 0, 7)))
    assert not r.is_special and r.effective_residual_rep is None
    assert r.to_json()["is_special"] is False


def test_quasi_uniform_examples(tri, looped_path):
    assert quasi_uniform_representative(tri, Divisor(tri, (0, 0, 3))) == Divisor(tri, (0, 0, 3))
    assert quasi_uniform_representative(tri, Divisor(tri, (2, 2, -1))) == Divisor(tri, (0, 0, 3))
    k = canonical_divisor(looped_path)
    assert k == Divisor(looped_path, (0, 4, 0))
    assert quasi_uniform_representative(looped_path, k) == k
    with pytest.raises(NotSpecialClass):
        quasi_uniform_representative(tri, Divisor(tri, (0, 0, 7)))


def test_residual_bounded_examples(tri, dpath):
    rep = residual_bounded_representative(tri, Divisor(tri, (0, 0, 3)))
    assert rep == Divisor(tri, (2, 2, -1))
    assert satisfies_residual_bounds(tri, rep)
    assert not satisfies_residual_bounds(tri, Divisor(tri, (3, 0, 0)))
    loop_at_v1 = Graph.build(["v1", "v2"], [("v1", "v1"), ("v1", "v2"), ("v1", "v2")])
    assert not satisfies_residual_bounds(loop_at_v1, Divisor(loop_at_v1, (-1, 1)))
    with pytest.raises(NotSpecialClass):
        residual_bounded_representative(dpath, Divisor(dpath, (3, 0, 0)))


@st.composite
def special_instances(draw, **kw):
    """A special divisor: anything below an effective canonical representative, moved by a script."""
    g = draw(graphs(max_vertices=5, max_extra=4, **kw))
    top = find_effective(g, canonical_divisor(g))
    assume(top.is_effective)
    base = [draw(st.integers(0, x)) for x in top.representative.values]
    f = draw(scripts(g, 0, 3))
    return g, Divisor(g, tuple(base)) + principal_divisor(g, f)


@given(special_instances())
def test_quasi_uniform_properties(inst):
    g, d = inst
    cert = quasi_uniform_run(g, d)
    assert all(within_quasi_uniform_upper(g, s.divisor) for s in cert.trace)
    rep = cert.representative
    assert is_quasi_uniform(g, rep)
    assert linear_equivalence_witness(g, d, rep) is not None
    if has_uniform_guarantee(g):
        assert is_uniform(g, rep)


@given(special_instances())
def test_residual_bounded_properties(inst):
    g, d = inst
    rep = residual_bounded_representative(g, d)
    assert satisfies_residual_bounds(g, rep)
    assert linear_equivalence_witness(g, d, rep) is not None


@given(special_instances(loops=True, max_weight=2))
def test_uniform_guarantee_with_weights(inst):
    g, d = inst
    if has_uniform_guarantee(g):
        assert is_uniform(g, quasi_uniform_representative(g, d))


@given(graph_and_divisor(lo=-2, hi=5, max_vertices=4))
def test_uniform_implies_special(gd):
    g, d = gd
    if is_uniform(g, d):
        assert specialness(g, d).is_special
    report = specialness(g, d)
    assert report.is_special == (
        find_effective(g, d).is_effective and find_effective(g, canonical_divisor(g) - d).is_effective)
