import numpy as np
import pytest

from demn_localization.evaluation import ala, ales, apg, confidence_interval, t_quantile
from demn_localization.exceptions import StatisticsError
from demn_localization.objectives import Placement


def test_ales_zero_for_exact_placement():
    truth = np.array([[10.0, 10.0], [20.0, 30.0]])
    assert ales(Placement(truth), truth, 25.0) == 0.0


def test_ales_hundred_when_every_error_is_one_radius():
    truth = np.array([[10.0, 10.0], [20.0, 30.0]])
    assert ales(truth + [25.0, 0.0], truth, 25.0) == pytest.approx(100.0)


def test_ales_averages_over_unknowns():
    truth = np.zeros((4, 2))
    predicted = np.array([[10.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]])
    assert ales(predicted, truth, 10.0) == pytest.approx(25.0)


def test_ales_rejects_mismatched_inputs():
    with pytest.raises(ValueError):
        ales(np.zeros((3, 2)), np.zeros((2, 2)), 25.0)
    with pytest.raises(ValueError):
        ales(np.zeros((2, 2)), np.zeros((2, 2)), 0.0)


def test_ala_is_complement_of_mean():
    assert ala([10.0, 20.0]) == pytest.approx(85.0)
    with pytest.raises(StatisticsError):
        ala([])


def test_apg():
    assert apg([30.0, 20.0], 10.0) == pytest.approx(15.0)
    assert apg([10.0], 10.0) == 0.0
    assert apg([29.81], 13.89) == pytest.approx(15.92)
    with pytest.raises(StatisticsError):
        apg([], 10.0)


def test_t_quantile():
    assert t_quantile(0.05, 1) == pytest.approx(12.706, abs=1e-3)
    assert t_quantile(0.05, 49) == pytest.approx(2.0096, abs=1e-3)


def test_interval_collapses_for_constant_samples():
    assert confidence_interval([5.0, 5.0, 5.0]) == (5.0, 5.0)


def test_interval_for_two_samples():
    lower, upper = confidence_interval([0.0, 2.0])
    assert lower == pytest.approx(1.0 - 12.706, abs=1e-3)
    assert upper == pytest.approx(1.0 + 12.706, abs=1e-3)


def test_interval_needs_two_samples():
    with pytest.raises(StatisticsError):
        confidence_interval([1.0])
    with pytest.raises(StatisticsError):
        confidence_interval([1.0, 2.0], alpha=1.5)


def test_interval_coverage():
    rng = np.random.default_rng(0)
    covered = 0
    trials = 1000
    for _ in range(trials):
        lower, upper = confidence_interval(rng.normal(10.0, 3.0, size=50))
        covered += lower <= 10.0 <= upper
    assert 0.92 <= covered / trials <= 0.975
