"""
Network Files
JSON persistence of sensor networks
"""

from typing import Dict, Any
from pathlib import Path
import json

from ..exceptions import NetworkError, NetworkParseError
from .topology import Network


def network_to_dict(network: Network) -> Dict[str, Any]:
    return {
        'shape': network.shape,
        'area': list(network.area),
        'radius': network.radius,
        'n_anchors': network.n_anchors,
        'nodes': network.positions.tolist()
    }


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def network_from_dict(data: Dict[str, Any]) -> Network:
    """Build a network from its file record, naming the offending field on failure"""
    for key in ('area', 'radius', 'n_anchors', 'nodes'):
        if key not in data:
            raise NetworkParseError(f"missing field '{key}'")

    nodes = data['nodes']
    if not isinstance(nodes, list):
        raise NetworkParseError("field 'nodes' must be a list of [x, y] pairs")
    for index, node in enumerate(nodes):
        if (not isinstance(node, list) or len(node) != 2 or
                not all(_is_number(v) for v in node)):
            raise NetworkParseError(f"nodes[{index}] is not an [x, y] pair: {node!r}")

    area = data['area']
    if not isinstance(area, list) or len(area) != 2:
        raise NetworkParseError(f"field 'area' must be [width, height], got {area!r}")
    for index, value in enumerate(area):
        if not _is_number(value):
            raise NetworkParseError(f"area[{index}] must be a number, got {value!r}")

    radius = data['radius']
    if not _is_number(radius):
        raise NetworkParseError(f"field 'radius' must be a number, got {radius!r}")

    n_anchors = data['n_anchors']
    if not isinstance(n_anchors, int) or isinstance(n_anchors, bool):
        raise NetworkParseError(f"field 'n_anchors' must be an integer, got {n_anchors!r}")
    if not 0 < n_anchors < len(nodes):
        raise NetworkParseError(
            f"field 'n_anchors' = {n_anchors} must lie strictly between 0 and {len(nodes)}"
        )

    width, height = float(area[0]), float(area[1])
    for index, (x, y) in enumerate(nodes):
        if not (0.0 <= x <= width and 0.0 <= y <= height):
            raise NetworkParseError(f"nodes[{index}] = [{x}, {y}] lies outside area {area}")

    try:
        return Network(
            positions=nodes,
            n_anchors=n_anchors,
            radius=float(radius),
            area=(width, height),
            shape=data.get('shape', 'random')
        )
    except (NetworkError, TypeError) as e:
        raise NetworkParseError(str(e)) from e


def save_network(network: Network, path: str) -> None:
    """Write a network as JSON; floats keep full round-trip precision"""
    output_path = Path(path)
    output_path.parent.mkdir(parents=True, exist_ok=True)
    with open(output_path, 'w') as f:
        json.dump(network_to_dict(network), f, indent=2)


def load_network(path: str) -> Network:
    """Read a network written by ``save_network``"""
    try:
        with open(path, 'r') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise NetworkParseError(f"{path}: invalid JSON ({e})") from e
    if not isinstance(data, dict):
        raise NetworkParseError(f"{path}: top-level value must be an object")
    return network_from_dict(data)
