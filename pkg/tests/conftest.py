import numpy as np
import pytest

from demn_localization.network import Network, TopologyShape, generate_network, hop_matrix


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


def floyd_warshall_hops(positions, radius):
    """Hop counts by Floyd-Warshall on the unit-weight graph; -1 when unreachable"""
    positions = np.asarray(positions, dtype=float)
    n = positions.shape[0]
    dist = np.full((n, n), np.inf)
    for i in range(n):
        dist[i, i] = 0.0
        for j in range(n):
            if i != j and np.hypot(*(positions[i] - positions[j])) <= radius:
                dist[i, j] = 1.0
    for k in range(n):
        dist = np.minimum(dist, dist[:, k:k + 1] + dist[k:k + 1, :])
    hops = np.where(np.isinf(dist), -1, dist).astype(int)
    return hops


def brute_force_fronts(points):
    """Fronts by repeatedly peeling the points no remaining point dominates"""
    points = [tuple(p) for p in points]
    n = len(points)

    def dominates(a, b):
        return all(x <= y for x, y in zip(a, b)) and any(x < y for x, y in zip(a, b))

    beaten_by = [[j for j in range(n) if j != i and dominates(points[j], points[i])] for i in range(n)]
    remaining = set(range(n))
    fronts = []
    while remaining:
        front = sorted(i for i in remaining if not any(j in remaining for j in beaten_by[i]))
        fronts.append(front)
        remaining -= set(front)
    return fronts


def demn_grid_cases():
    """(d, R, m) grid with R < d < 2R, ub per the default model"""
    cases = []
    for radius in (25.0, 30.0, 35.0, 40.0):
        for m in (1, 2):
            for k in range(6):
                cases.append((radius + 1.0 + k * (radius - 2.0) / 5.0, radius, m))
    cases += [(37.5, 25.0, 1), (37.5, 25.0, 2)]
    return cases


def sample_feasible_distances(d, radius, m, ub, samples, seed):
    """
    Distances to a_i of uniform points where a hop-m node can sit, by rejection
    on distances alone: within R of a_j = (d, 0), within ub of a_i = (0, 0),
    beyond R of a_i when m = 2, upper half-plane. Returns (distances, area).
    """
    rng = np.random.default_rng(seed)
    x_lo, x_hi = d - radius, min(d + radius, ub)
    x = rng.uniform(x_lo, x_hi, samples)
    y = rng.uniform(0.0, radius, samples)
    to_i = np.hypot(x, y)
    inside = (np.hypot(x - d, y) <= radius) & (to_i <= ub)
    if m == 2:
        inside &= to_i > radius
    box_area = (x_hi - x_lo) * radius
    return to_i[inside], box_area * inside.mean()


@pytest.fixture
def line_network():
    """Four nodes on a line 10 m apart, R = 10: anchors at x=0 and x=30, unknowns at x=10 and x=20"""
    positions = [[0.0, 50.0], [30.0, 50.0], [10.0, 50.0], [20.0, 50.0]]
    return Network(positions=positions, n_anchors=2, radius=10.0, area=(100.0, 100.0))


@pytest.fixture(scope="module")
def small_network():
    return generate_network(TopologyShape.named("random"), 40, 10, 30.0, seed=11)


@pytest.fixture(scope="module")
def small_hops(small_network):
    return hop_matrix(small_network)
