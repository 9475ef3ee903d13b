import numpy as np
import pytest

from conftest import random_connected_graph
from trapping.errors import AllWalksCapped, InvalidSize
from trapping.exact import att, trapping_times_exact
from trapping.graph import complete, cycle, path, star
from trapping.montecarlo import SimConfig, simulate, walk_uniforms


def test_star_center_forced_single_step():
    for seed in (0, 1, 12345):
        est = simulate(star(8), 0, SimConfig(seed=seed, walks_per_vertex=200))
        np.testing.assert_array_equal(est.mean_tt[1:], 1.0)
        np.testing.assert_array_equal(est.stderr_tt, 0.0)
        assert est.att_estimate == 1.0 and est.att_stderr == 0.0
        assert est.valid and np.all(est.min_steps[1:] == 1)


@pytest.mark.parametrize("g,exact", [(complete(4), 3.0), (cycle(4), 10 / 3)])
def test_small_fixtures_within_three_sigma(g, exact):
    est = simulate(g, 0, SimConfig(seed=7, walks_per_vertex=100_000))
    assert est.valid
    assert abs(est.att_estimate - exact) <= 3 * est.att_stderr


def test_deterministic_per_seed():
    g = cycle(7)
    a = simulate(g, 2, SimConfig(seed=3, walks_per_vertex=500))
    b = simulate(g, 2, SimConfig(seed=3, walks_per_vertex=500))
    np.testing.assert_array_equal(a.mean_tt, b.mean_tt)
    np.testing.assert_array_equal(a.stderr_tt, b.stderr_tt)
    assert a.att_estimate == b.att_estimate
    c = simulate(g, 2, SimConfig(seed=4, walks_per_vertex=500))
    assert c.att_estimate != a.att_estimate


def test_result_independent_of_batching():
    g = cycle(9)
    ref = simulate(g, 0, SimConfig(seed=11, walks_per_vertex=300))
    for batch in (1, 7, 300, 1000):
        est = simulate(g, 0, SimConfig(seed=11, walks_per_vertex=300, batch_walks=batch))
        np.testing.assert_array_equal(est.mean_tt, ref.mean_tt)
        np.testing.assert_array_equal(est.stderr_tt, ref.stderr_tt)


def test_walk_streams_are_distinct_and_uniform():
    a = walk_uniforms(0, 1, 0, 5000)
    assert not np.array_equal(a, walk_uniforms(0, 1, 1, 5000))
    assert not np.array_equal(a, walk_uniforms(0, 2, 0, 5000))
    assert not np.array_equal(a, walk_uniforms(1, 1, 0, 5000))
    np.testing.assert_array_equal(a, walk_uniforms(0, 1, 0, 5000))
    assert np.all((a >= 0) & (a < 1))
    assert abs(a.mean() - 0.5) < 0.02


def test_leaf_trap_needs_at_least_two_steps():
    est = simulate(star(6), 1, SimConfig(seed=0, walks_per_vertex=2000))
    # walks from other leaves must pass through the center first
    assert np.all(est.min_steps[2:] >= 2)
    assert est.min_steps[0] == 1


def test_capped_walks_flag_estimate():
    est = simulate(path(12), 0, SimConfig(seed=0, walks_per_vertex=200, max_steps=40))
    assert est.capped_walks > 0
    assert not est.valid


def test_all_walks_capped_raises():
    with pytest.raises(AllWalksCapped) as exc:
        simulate(path(10), 0, SimConfig(seed=0, walks_per_vertex=5, max_steps=3))
    assert 2 <= exc.value.vertex <= 9


def test_config_validation():
    for kwargs in ({"walks_per_vertex": 0}, {"max_steps": 0}, {"batch_walks": 0}):
        with pytest.raises(InvalidSize):
            SimConfig(**kwargs)


def test_random_graphs_agree_with_exact(rng):
    hits = 0
    for _ in range(8):
        g = random_connected_graph(rng, int(rng.integers(3, 20)), 0.2)
        theta = int(rng.integers(g.vertex_count))
        exact = att(trapping_times_exact(g, theta))
        est = simulate(g, theta, SimConfig(seed=int(rng.integers(2**32)), walks_per_vertex=4000))
        hits += abs(est.att_estimate - exact) <= 3 * est.att_stderr
    assert hits >= 7
