import numpy as np
import pytest

from demn_localization.core import DistanceEstimate, EstimateSource, estimate_positions
from demn_localization.exceptions import ConfigError
from demn_localization.network import Network, hop_matrix
from demn_localization.objectives import DistanceTable, distance_table
from demn_localization.optimization import GaConfig, GeneticSolver, choose_output, run


@pytest.fixture
def line_problem(line_network):
    hops = hop_matrix(line_network)
    return line_network, hops, distance_table(line_network, hops, use_demn=False)


@pytest.fixture
def triangle_problem():
    """One unknown inside three anchors with exact distances"""
    positions = [[20.0, 20.0], [80.0, 20.0], [50.0, 80.0], [45.0, 40.0]]
    network = Network(positions=positions, n_anchors=3, radius=50.0, area=(100.0, 100.0))
    truth = np.array([45.0, 40.0])
    estimates = [
        DistanceEstimate(anchor=i, unknown=3, distance=float(np.linalg.norm(network.positions[i] - truth)),
                         source=EstimateSource.CLASSIC_DVHOP)
        for i in range(3)
    ]
    return network, hop_matrix(network), DistanceTable(3, 1, estimates)


@pytest.mark.parametrize("changes", [
    dict(population_size=3),
    dict(population_size=0),
    dict(max_iter=-1),
    dict(pc=1.5),
    dict(pm=-0.1),
    dict(eta_c=0.0),
    dict(objectives=('f2',)),
])
def test_invalid_ga_config(changes):
    with pytest.raises(ConfigError):
        GaConfig(**changes)


def test_ga_config_dict_round_trip():
    config = GaConfig(population_size=10, max_iter=7, objectives=('f1',), warm_start=True)
    assert GaConfig.from_dict(config.to_dict()) == config
    with pytest.raises(ConfigError):
        GaConfig.from_dict({'generations': 10})


def test_choose_output_prefers_hop_loss():
    objectives = np.array([[5.0, 1.0], [3.0, 1.0], [1.0, 2.0]])
    assert choose_output(objectives) == 1
    assert choose_output(objectives, use_hop_loss=False) == 2


def test_choose_output_ties_go_to_lowest_index():
    assert choose_output(np.array([[1.0, 1.0], [1.0, 1.0]])) == 0


def test_zero_iterations_returns_initial_population(line_problem):
    network, hops, table = line_problem
    config = GaConfig(population_size=6, max_iter=0, seed=3)
    result = run(network, hops, table, config)

    expected = np.random.default_rng(3).uniform(
        np.zeros(4), np.tile([100.0, 100.0], 2), size=(6, 4)
    )
    genes = np.array([ind.placement.genes for ind in result.final_population])
    np.testing.assert_array_equal(genes, expected)

    objectives = np.array([ind.objectives.as_tuple() for ind in result.final_population])
    assert result.chosen is result.final_population[choose_output(objectives)]
    assert len(result.history) == 1


def test_runs_are_seed_deterministic(line_problem):
    network, hops, table = line_problem
    config = GaConfig(population_size=8, max_iter=15, seed=11)
    first = run(network, hops, table, config)
    second = run(network, hops, table, config)
    other = run(network, hops, table, config.replace(seed=12))
    assert first.history == second.history
    assert first.chosen.placement == second.chosen.placement
    assert first.chosen.placement != other.chosen.placement


def test_best_objectives_never_regress(small_network, small_hops):
    table = distance_table(small_network, small_hops)
    result = run(small_network, small_hops, table, GaConfig(population_size=10, max_iter=20, seed=1))
    history = np.array(result.history)
    assert len(history) == 21
    assert np.all(np.diff(history[:, 0]) <= 0.0)
    assert np.all(np.diff(history[:, 1]) <= 0.0)


def test_genes_stay_in_area(small_network, small_hops):
    table = distance_table(small_network, small_hops, use_demn=False)
    result = run(small_network, small_hops, table, GaConfig(population_size=10, max_iter=10, seed=2))
    for individual in result.final_population:
        assert np.all(individual.placement.coords >= 0.0)
        assert np.all(individual.placement.coords <= 100.0)
        assert individual.rank >= 0


def test_exact_distances_pin_down_single_unknown(triangle_problem):
    network, hops, table = triangle_problem
    result = run(network, hops, table, GaConfig(seed=0))
    assert result.chosen.objectives.f2 == 0.0
    assert np.linalg.norm(result.chosen.placement.coords[0] - [45.0, 40.0]) < 1.0


def test_warm_start_seeds_first_individual(small_network, small_hops):
    table = distance_table(small_network, small_hops)
    solver = GeneticSolver(small_network, small_hops, table, GaConfig(population_size=6, warm_start=True))
    genes = solver.initial_population()
    expected = estimate_positions(small_network, small_hops, table.by_unknown()).reshape(-1)
    np.testing.assert_allclose(genes[0], expected)


def test_distance_loss_only_mode_picks_min_f1(line_problem):
    network, hops, table = line_problem
    config = GaConfig(population_size=8, max_iter=10, seed=4, objectives=('f1',))
    result = run(network, hops, table, config)
    best = min(ind.objectives.f1 for ind in result.final_population)
    assert result.chosen.objectives.f1 == best
    history = np.array(result.history)
    assert np.all(np.diff(history[:, 0]) <= 0.0)


def test_selection_keeps_population_size(line_problem):
    network, hops, table = line_problem
    solver = GeneticSolver(network, hops, table, GaConfig(population_size=6))
    pooled = np.random.default_rng(0).random((12, 2))
    keep = solver.select(pooled)
    assert len(keep) == 6
    assert len(set(keep.tolist())) == 6


def test_selection_keeps_min_hop_loss_among_crowding_ties(line_problem):
    network, hops, table = line_problem
    solver = GeneticSolver(network, hops, table, GaConfig(population_size=2))
    # one front, every point a boundary point
    pooled = np.array([[1.0, 5.0], [1.0, 5.0], [3.0, 1.0]])
    keep = solver.select(pooled)
    assert sorted(keep.tolist()) == [0, 2]


def test_selection_tie_break_follows_output_rule(line_problem):
    network, hops, table = line_problem
    solver = GeneticSolver(network, hops, table, GaConfig(population_size=2))
    pooled = np.array([[4.0, 2.0], [4.0, 2.0], [2.0, 4.0], [2.0, 4.0]])
    keep = solver.select(pooled)
    assert sorted(keep.tolist()) == [0, 1]
    assert choose_output(pooled) in keep.tolist()
