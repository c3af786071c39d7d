"""
Shared fixtures for the CACD toolkit tests
"""

import json
import os
import sys

import networkx as nx
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from analysis.oracles import derive_forbidden_catalog  # noqa: E402
from core.digraph import Digraph  # noqa: E402


def to_networkx(g):
    """networkx view of a Digraph, used as an independent oracle."""
    graph = nx.DiGraph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


@pytest.fixture
def d3():
    """Directed triangle 0->1->2->0 dominated by vertex 3."""
    return Digraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2)])


@pytest.fixture
def triangle_into_sink():
    return Digraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


@pytest.fixture(scope="session")
def small_catalog():
    return derive_forbidden_catalog(4)


@pytest.fixture
def write_json(tmp_path):
    def write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write
