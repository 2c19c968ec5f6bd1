import math

import pytest
from hypothesis import given, settings, strategies as st

from chromaconn import (
    EdgeColoring,
    Polynomial,
    build_graph,
    chromatic_polynomial,
    complete_graph,
    cycle_graph,
    edge_chromatic_polynomial,
    evaluate_polynomial,
    four_color_check,
    is_proper_edge_coloring,
    line_graph,
    lll_condition,
    nullstellensatz_value,
    path_graph,
    petersen_graph,
    star_graph,
)
from chromaconn.graph import contract_edge, delete_edge

from oracles import count_proper_edge_colorings, count_proper_vertex_colorings


def graph_strategy(max_n=6):
    def build(n, mask):
        pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
        return build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])

    return st.integers(1, max_n).flatmap(
        lambda n: st.builds(build, st.just(n),
                            st.integers(0, 2 ** (n * (n - 1) // 2) - 1)))


# -------------------------------------------------------------- polynomial


def test_polynomial_basics():
    p = Polynomial((0, 2, -3, 1))
    assert p.degree == 3
    assert p(0) == 0 and p(1) == 0 and p(3) == 6
    assert p.to_text() == "0,2,-3,1"
    assert Polynomial.from_text("0,2,-3,1") == p
    assert Polynomial((1, 0, 0)).coeffs == (1,)  # trailing zeros trimmed
    assert Polynomial((0, 0)).coeffs == (0,)
    assert evaluate_polynomial(p, 3) == 6
    with pytest.raises(ValueError):
        Polynomial.from_text("1,a")


# --------------------------------------------------------------- chromatic


def test_chromatic_known_values():
    assert chromatic_polynomial(complete_graph(3)).coeffs == (0, 2, -3, 1)
    # path on 4 vertices: k (k-1)^3
    assert chromatic_polynomial(path_graph(4)).coeffs == (0, -1, 3, -3, 1)
    # 4-cycle: (k-1)^4 + (k-1)
    assert chromatic_polynomial(cycle_graph(4)).coeffs == (0, -3, 6, -4, 1)
    assert chromatic_polynomial(build_graph(1, [])).coeffs == (0, 1)
    assert chromatic_polynomial(build_graph(3, [])).coeffs == (0, 0, 0, 1)
    # disconnected graphs multiply componentwise: two disjoint edges
    two = build_graph(4, [(0, 1), (2, 3)])
    f = chromatic_polynomial(two)
    assert f(3) == 36  # (3*2)^2
    assert chromatic_polynomial(complete_graph(5))(4) == 0
    assert chromatic_polynomial(complete_graph(5))(5) == 120


def test_chromatic_matches_enumeration_small():
    for g in (path_graph(4), cycle_graph(5), complete_graph(4),
              star_graph(3), build_graph(5, [(0, 1), (0, 2), (1, 2), (2, 3),
                                             (3, 4), (2, 4)])):
        f = chromatic_polynomial(g)
        for t in range(4):
            assert f(t) == count_proper_vertex_colorings(g.n, list(g.edges), t)


@settings(max_examples=60, deadline=None)
@given(graph_strategy(5))
def test_deletion_contraction_identity(g):
    if g.m == 0:
        return
    f = chromatic_polynomial(g)
    fd = chromatic_polynomial(delete_edge(g, 0))
    fc = chromatic_polynomial(contract_edge(g, 0))
    assert f.coeffs == tuple(a - b for a, b in
                             zip(fd.coeffs + (0,) * 8, fc.coeffs + (0,) * 8)
                             )[:len(f.coeffs)]


def test_edge_chromatic_is_line_graph_chromatic():
    for g in (path_graph(4), cycle_graph(4), complete_graph(4)):
        assert edge_chromatic_polynomial(g) == chromatic_polynomial(line_graph(g))
    # proper edge 5-colorings of the 5-clique, a classic count
    assert edge_chromatic_polynomial(complete_graph(5))(5) == 720
    for t in range(4):
        assert edge_chromatic_polynomial(cycle_graph(4))(t) == \
            count_proper_edge_colorings(4, list(cycle_graph(4).edges), t)


def test_four_color_check():
    assert four_color_check(complete_graph(4))
    assert four_color_check(petersen_graph())
    assert not four_color_check(complete_graph(5))


# ------------------------------------------------------------------- local


def test_is_proper_edge_coloring():
    g = path_graph(3)
    assert is_proper_edge_coloring(g, EdgeColoring((0, 1), 2))
    assert not is_proper_edge_coloring(g, EdgeColoring((0, 0), 1))
    k3 = complete_graph(3)
    assert is_proper_edge_coloring(k3, EdgeColoring((0, 1, 2), 3))
    assert not is_proper_edge_coloring(k3, EdgeColoring((0, 1, 1), 2))
    with pytest.raises(ValueError):
        is_proper_edge_coloring(g, EdgeColoring((0,), 1))


def test_lll_condition():
    assert lll_condition(0.05, 5)
    assert not lll_condition(0.07, 5)
    assert lll_condition(1.0 / (math.e * 6), 5)
    assert lll_condition(0.0, 100)
    assert not lll_condition(1.0, 0)
    with pytest.raises(ValueError):
        lll_condition(-0.1, 3)
    with pytest.raises(ValueError):
        lll_condition(1.1, 3)
    with pytest.raises(ValueError):
        lll_condition(0.5, -1)


def test_nullstellensatz_value():
    k3 = complete_graph(3)
    assert nullstellensatz_value(k3, (0, 1, 2)) == -2
    assert nullstellensatz_value(k3, (0, 1, 1)) == 0
    # one vertex of degree >= 2: product over its incident pairs
    assert nullstellensatz_value(path_graph(3), (2, 5)) == -3
    assert nullstellensatz_value(path_graph(2), (7,)) == 1  # empty product
    with pytest.raises(ValueError):
        nullstellensatz_value(k3, (0, 1))


def test_nullstellensatz_iff_proper_small():
    from itertools import product as iproduct

    for g in (path_graph(4), cycle_graph(4), star_graph(3)):
        for vals in iproduct((0, 1, 2), repeat=g.m):
            nz = nullstellensatz_value(g, vals) != 0
            proper = is_proper_edge_coloring(g, EdgeColoring(vals, 3))
            assert nz == proper
