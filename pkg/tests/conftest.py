"""Shared test helpers: conversion to networkx for independent oracles."""

import networkx as nx
import pytest

from rcgame.generators import generalized_johnson, named_instance
from rcgame.graph import Graph


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return generalized_johnson(5, 2, 0)


@pytest.fixture(scope="session")
def cubic_vt() -> Graph:
    return named_instance("CubicVT24_6")
