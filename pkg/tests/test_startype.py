from fractions import Fraction

import networkx as nx
import pytest

from conftest import rational_att, rational_trapping_times, random_startype_spec
from trapping.errors import GammaOutOfRange, InvalidSize, NotRegular
from trapping.exact import att, kemeny, lower_bound, trapping_times_exact
from trapping.graph import StarTypeSpec, complete, compose_star_type, cycle, from_edge_list, isolated, path, subdivide
from trapping.startype import (
    att_startype_closed_form,
    bound_set,
    corollary1_upper,
    corollary2_upper,
    kemeny_startype,
    lemma2_lower,
    prop1_upper,
    regular_degree,
    restricted_att,
    scalefree_scaling_exponent,
    subdivided_counts,
    subdivided_lower,
)

K3 = StarTypeSpec([complete(3)])
K4 = StarTypeSpec([complete(4)])
EDGE_AND_POINT = StarTypeSpec([path(2), isolated()])
POINTS = StarTypeSpec([isolated()] * 4)


def subdivided(spec, n):
    g, u = compose_star_type(spec)
    return subdivide(g, n, scope="component", spec=spec), u


def test_closed_form_values():
    assert att_startype_closed_form(POINTS) == 1
    assert att_startype_closed_form(K3) == 3
    assert att_startype_closed_form(EDGE_AND_POINT) == Fraction(5, 3)
    g, u = compose_star_type(EDGE_AND_POINT)
    assert rational_trapping_times(g, u)[1:] == [2, 2, 1]


def test_kemeny_closed_form_values():
    exact, approx = kemeny_startype(StarTypeSpec([isolated()] * 7))
    assert exact == Fraction(1, 2)
    assert exact == 2 + Fraction(1, 2) - 2
    exact, _ = kemeny_startype(K3)
    assert exact == Fraction(9, 4)
    g, u = compose_star_type(K3)
    assert kemeny(g, u, trapping_times_exact(g, u)) == pytest.approx(9 / 4, rel=1e-12)
    # <k> -> 2 for large stars, so the approximation tends to 1/2
    _, approx = kemeny_startype(StarTypeSpec([isolated()] * 20000))
    assert float(approx) == pytest.approx(0.5, abs=1e-3)


@pytest.mark.parametrize("n,counts", [(0, (4, 6)), (1, (7, 9)), (2, (10, 12))])
def test_subdivided_counts_k3(n, counts):
    assert subdivided_counts(K3, n) == counts
    g, _ = subdivided(K3, n)
    assert (g.vertex_count, g.edge_count) == counts


def test_subdivided_counts_match_construction(rng):
    for _ in range(20):
        spec = random_startype_spec(rng)
        for n in range(4):
            g, _ = subdivided(spec, n)
            assert subdivided_counts(spec, n) == (g.vertex_count, g.edge_count)
    with pytest.raises(InvalidSize):
        subdivided_counts(K3, -1)


def test_first_order_lower_bound_values():
    assert lemma2_lower(K3) == 5
    assert lemma2_lower(POINTS) == 1
    assert lemma2_lower(EDGE_AND_POINT) == Fraction(7, 3)
    g, u = subdivided(K3, 1)
    assert Fraction(lower_bound(g, u)).limit_denominator(1000) == lemma2_lower(K3)
    assert subdivided_lower(K3, 1) == lemma2_lower(K3)


def test_first_order_upper_bound_values():
    assert prop1_upper(K3) == Fraction(21, 2)
    assert prop1_upper(POINTS) == 1
    assert prop1_upper(EDGE_AND_POINT) == Fraction(15, 4)


def test_restricted_att_k3_by_hand():
    g, u = subdivided(K3, 1)
    tt = rational_trapping_times(g, u)
    assert tt[1:4] == [5, 5, 5]
    assert tt[4:] == [6, 6, 6]
    assert restricted_att(K3) == 5 == sum(tt[1:4]) / 3
    assert restricted_att(POINTS) == 1


def test_restricted_att_equals_first_order_lower_bound(rng):
    for _ in range(30):
        spec = random_startype_spec(rng)
        assert restricted_att(spec) == lemma2_lower(spec)
        g, u = subdivided(spec, 1)
        tt = trapping_times_exact(g, u).tt
        assert tt[1:spec.vertex_count].mean() == pytest.approx(float(restricted_att(spec)), rel=1e-9)


def test_regular_component_values():
    assert corollary1_upper(K3, 2) == Fraction(11, 2)
    assert rational_att(*subdivided(K3, 1)) == Fraction(11, 2)
    assert corollary1_upper(K4, 3) == Fraction(38, 5)
    assert rational_att(*subdivided(K4, 1)) == Fraction(38, 5)
    assert corollary1_upper(POINTS, 0) == 1
    with pytest.raises(NotRegular):
        corollary1_upper(StarTypeSpec([path(3)]), 1)
    with pytest.raises(NotRegular):
        corollary1_upper(K3, 3)


def test_regular_component_formula_is_exact():
    specs = [
        StarTypeSpec([from_edge_list(nx.petersen_graph().edges())]),
        StarTypeSpec([from_edge_list(nx.random_regular_graph(3, 10, seed=1).edges())]),
        StarTypeSpec([cycle(5), cycle(3), cycle(8)]),
        StarTypeSpec([from_edge_list(nx.random_regular_graph(4, 11, seed=3).edges())]),
    ]
    for spec in specs:
        d = regular_degree(spec)
        g, u = subdivided(spec, 1)
        assert att(trapping_times_exact(g, u)) == pytest.approx(float(corollary1_upper(spec, d)), rel=1e-9)


def test_parity_bound_values():
    assert corollary2_upper(K3, 1) == Fraction(27, 4)
    assert corollary2_upper(K3, 1) > Fraction(11, 2)
    assert rational_att(*subdivided(K3, 2)) == Fraction(25, 3)
    assert corollary2_upper(K3, 2) == Fraction(32, 3)
    for n in (1, 2, 3, 4):
        assert corollary2_upper(POINTS, n) == 1
    with pytest.raises(InvalidSize):
        corollary2_upper(K3, 0)


def test_parity_bound_is_attained_by_a_single_edge_component():
    # u plus one edge is a triangle; subdividing gives the cycle C_{n+3}
    spec = StarTypeSpec([path(2)])
    for n in (1, 2, 3, 4):
        assert rational_att(*subdivided(spec, n)) == corollary2_upper(spec, n)


def test_bound_set_contents():
    bs = bound_set(K3, 1)
    assert (bs.lower, bs.upper_prop1, bs.upper_cor1, bs.restricted_att) == (5, Fraction(21, 2), Fraction(11, 2), 5)
    assert not bs.degenerate
    bs2 = bound_set(EDGE_AND_POINT, 2)
    assert bs2.upper_prop1 is None and bs2.upper_cor1 is None
    assert bs2.upper_cor2 == corollary2_upper(EDGE_AND_POINT, 2)
    assert bound_set(POINTS, 1).degenerate
    assert bound_set(K3, 0).upper_cor2 is None


def test_hub_trap_closed_form_random_specs(rng):
    for _ in range(40):
        spec = random_startype_spec(rng)
        g, u = compose_star_type(spec)
        a = att(trapping_times_exact(g, u))
        assert a == pytest.approx(float(att_startype_closed_form(spec)), rel=1e-9)
        assert a == pytest.approx(lower_bound(g, u), rel=1e-9)


def test_kemeny_closed_form_holds_when_component_vertices_share_degree():
    for spec in (K3, K4, StarTypeSpec([cycle(5), cycle(7)]), StarTypeSpec([complete(3), complete(3)])):
        g, u = compose_star_type(spec)
        k = kemeny(g, u, trapping_times_exact(g, u))
        assert k == pytest.approx(float(kemeny_startype(spec)[0]), rel=1e-9)


def test_kemeny_closed_form_fails_for_mixed_component_degrees():
    g, u = compose_star_type(EDGE_AND_POINT)
    assert kemeny_startype(EDGE_AND_POINT)[0] == Fraction(25, 24)
    assert kemeny(g, u, trapping_times_exact(g, u)) == pytest.approx(9 / 8, rel=1e-12)


def test_scalefree_exponent():
    assert scalefree_scaling_exponent(2.5) == pytest.approx(1 / 3)
    assert scalefree_scaling_exponent(2 + 1e-9) == pytest.approx(0, abs=1e-8)
    assert scalefree_scaling_exponent(3 - 1e-9) == pytest.approx(0.5, abs=1e-8)
    for gamma in (2.0, 3.0, 1.5):
        with pytest.raises(GammaOutOfRange):
            scalefree_scaling_exponent(gamma)
