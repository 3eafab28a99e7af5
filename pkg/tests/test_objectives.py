import numpy as np
import pytest

from demn_localization.core import DistanceEstimate, EstimateSource
from demn_localization.network import (
    HopMatrix, Network, TopologyShape, UNREACHABLE, generate_network, hop_matrix
)
from demn_localization.objectives import (
    DistanceTable, ObjectiveEvaluator, Placement, distance_table, f1, f2, hop_penalty,
    predicted_hops
)


@pytest.fixture
def hop_chain():
    """Anchors at x = 0 and 100, unknowns every 20 m between them, R = 20"""
    positions = [[0.0, 50.0], [100.0, 50.0], [20.0, 50.0], [40.0, 50.0], [60.0, 50.0], [80.0, 50.0]]
    return Network(positions=positions, n_anchors=2, radius=20.0, area=(100.0, 100.0))


def test_classic_table_on_hop_chain(hop_chain):
    hops = hop_matrix(hop_chain)
    table = distance_table(hop_chain, hops)
    assert hops[0, 5] == 4
    assert table[(0, 5)].distance == pytest.approx(80.0)
    assert table[(1, 5)].distance == pytest.approx(20.0)
    assert table.count_by_source() == {'classic_dvhop': 8, 'demn': 0}
    assert len(table) == 8


def test_demn_entries_replace_classic_ones():
    network = Network(positions=[[20.0, 50.0], [50.0, 50.0], [35.0, 60.0]], n_anchors=2,
                      radius=25.0, area=(100.0, 100.0))
    hops = hop_matrix(network)
    table = distance_table(network, hops)
    assert table[(0, 2)].source is EstimateSource.DEMN
    assert table[(0, 2)].partner == 1

    classic = distance_table(network, hops, use_demn=False)
    assert classic[(0, 2)].source is EstimateSource.CLASSIC_DVHOP
    assert classic[(0, 2)].distance == pytest.approx(15.0)


def test_unreachable_pairs_stay_out_of_table():
    network = Network(positions=[[0, 0], [20, 0], [40, 0], [10, 5], [100, 100]], n_anchors=3,
                      radius=25.0, area=(100, 100))
    table = distance_table(network, hop_matrix(network), use_demn=False)
    assert (0, 4) not in table
    assert table.get(0, 4) is None
    assert not table.mask[:, 1].any()
    assert np.isnan(table.distances[0, 1])
    assert table.for_unknown(4) == []
    assert len(table.for_unknown(3)) == 3


def test_f1_single_residual():
    table = DistanceTable(1, 1, [DistanceEstimate(0, 1, 5.0, EstimateSource.CLASSIC_DVHOP)])
    assert f1(Placement([[8.0, 0.0]]), table, np.array([[0.0, 0.0]])) == pytest.approx(9.0)


def test_f1_matches_double_loop(small_network, small_hops):
    table = distance_table(small_network, small_hops)
    rng = np.random.default_rng(0)
    placement = Placement(rng.uniform(0.0, 100.0, size=(small_network.n_unknowns, 2)))

    expected = 0.0
    for (anchor, unknown), estimate in table.items():
        point = placement.coords[unknown - small_network.n_anchors]
        actual = np.linalg.norm(small_network.positions[anchor] - point)
        expected += (actual - estimate.distance) ** 2

    assert f1(placement, table, small_network.anchor_positions) == pytest.approx(expected, rel=1e-12)


def test_predicted_hops_at_ground_truth(small_network, small_hops):
    placement = Placement(small_network.unknown_positions)
    assert predicted_hops(placement, small_network) == small_hops


def test_predicted_hops_disconnect_far_unknowns(line_network):
    placement = Placement([[90.0, 90.0], [95.0, 95.0]])
    pred = predicted_hops(placement, line_network)
    assert pred[0, 2] == UNREACHABLE
    assert pred[2, 3] == 1


def test_f2_identical_matrices():
    real = HopMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    assert f2(real, real, 1) == 0.0


def test_f2_single_hop_difference():
    real = HopMatrix([[0, 1], [1, 0]])
    pred = HopMatrix([[0, 2], [2, 0]])
    assert f2(pred, real, 1) == 1.0


def test_f2_unreachable_uses_penalty():
    real = HopMatrix([[0, 1], [1, 0]])
    pred = HopMatrix([[0, UNREACHABLE], [UNREACHABLE, 0]])
    assert f2(pred, real, 1, unreachable_penalty=10) == 81.0


def test_f2_default_penalty_is_node_count():
    real = HopMatrix([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    pred = HopMatrix([[0, -1, -1], [-1, 0, -1], [-1, -1, 0]])
    # (1 - 3)^2 + (2 - 3)^2 + (1 - 3)^2
    assert f2(pred, real, 1) == 9.0


def test_f2_ignores_far_real_pairs():
    real = HopMatrix([[0, 3], [3, 0]])
    pred = HopMatrix([[0, 1], [1, 0]])
    assert f2(pred, real, 1) == 0.0


def test_f2_excludes_anchor_pairs():
    real = HopMatrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    pred = HopMatrix([[0, 2, 1], [2, 0, 1], [1, 1, 0]])
    assert f2(pred, real, n_anchors=1) == 1.0
    assert f2(pred, real, n_anchors=2) == 0.0


def test_f2_needs_anchor_count():
    real = HopMatrix([[0, 1], [1, 0]])
    with pytest.raises(TypeError):
        f2(real, real)


def test_anchor_route_through_unknown_does_not_count():
    # anchors at x = 0 and 30 reach each other only through the unknown at x = 15
    network = Network(positions=[[0.0, 50.0], [30.0, 50.0], [15.0, 50.0]], n_anchors=2,
                      radius=20.0, area=(100.0, 100.0))
    real = hop_matrix(network)
    assert real[0, 1] == 2
    placement = Placement([[15.0, 30.0]])
    pred = predicted_hops(placement, network)
    assert pred[0, 1] == UNREACHABLE
    assert pred[0, 2] == pred[1, 2] == UNREACHABLE
    evaluator = ObjectiveEvaluator(network, real, distance_table(network, real, use_demn=False))
    penalty = hop_penalty(network)
    assert evaluator.hop_loss(placement) == 2.0 * (1 - penalty) ** 2
    assert f2(pred, real, network.n_anchors, penalty) == 2.0 * (1 - penalty) ** 2


def test_f2_size_mismatch():
    with pytest.raises(ValueError):
        f2(HopMatrix([[0]]), HopMatrix([[0, 1], [1, 0]]), 1)


def test_hop_penalty_for_default_area():
    network = generate_network(TopologyShape.named("random"), 20, 5, 25.0, seed=0)
    assert hop_penalty(network) == 7


def test_hop_loss_vanishes_at_ground_truth():
    for seed in range(30):
        network = generate_network(TopologyShape.named("random"), 30, 6, 25.0, seed=seed)
        real = hop_matrix(network)
        table = distance_table(network, real, use_demn=False)
        evaluator = ObjectiveEvaluator(network, real, table)
        assert evaluator.hop_loss(Placement(network.unknown_positions)) == 0.0


def test_evaluator_reports_both_objectives(small_network, small_hops):
    table = distance_table(small_network, small_hops)
    evaluator = ObjectiveEvaluator(small_network, small_hops, table)
    placement = Placement(np.full((small_network.n_unknowns, 2), 50.0))
    values = evaluator.evaluate(placement)
    assert values.f1 == pytest.approx(f1(placement, table, small_network.anchor_positions))
    assert values.f2 > 0.0
    assert set(evaluator.to_dict()) == {'penalty', 'pairs_in_hop_loss', 'table'}


def test_placement_gene_layout():
    placement = Placement.from_genes(np.array([1.0, 2.0, 3.0, 4.0]))
    assert placement.to_list() == [[1.0, 2.0], [3.0, 4.0]]
    np.testing.assert_array_equal(placement.genes, [1.0, 2.0, 3.0, 4.0])
    assert len(placement) == 2
