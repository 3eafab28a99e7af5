"""
Network Model
Synthetic sensor networks, connectivity and hop counts
"""

from .topology import Network, TopologyShape, ShapeKind, generate_network
from .hops import HopMatrix, UNREACHABLE, hop_matrix, hops_from_positions
from .network_io import load_network, save_network

__all__ = [
    'Network',
    'TopologyShape',
    'ShapeKind',
    'generate_network',
    'HopMatrix',
    'UNREACHABLE',
    'hop_matrix',
    'hops_from_positions',
    'load_network',
    'save_network'
]
