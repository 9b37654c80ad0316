from __future__ import annotations

import os
from pathlib import Path
from typing import List

import networkx as nx
import pytest

from loopy_wl.domain.generators import (
    gen_chordal_pair,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_rook44,
    gen_shrikhande,
    gen_star,
    gen_two_triangles_bridge,
)
from loopy_wl.domain.graphs import Graph
from loopy_wl.shared.config import AppConfig

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    for key in list(os.environ):
        if key.startswith("LOOPY_WL_") and key not in ("LOOPY_WL_GRAPH8C", "LOOPY_WL_FIXTURES"):
            monkeypatch.delenv(key, raising=False)
    monkeypatch.delenv("DEBUG", raising=False)
    monkeypatch.delenv("LOG_TO_FILE", raising=False)


@pytest.fixture
def config() -> AppConfig:
    return AppConfig()


@pytest.fixture
def k3() -> Graph:
    return gen_complete(3)


@pytest.fixture
def k4() -> Graph:
    return gen_complete(4)


@pytest.fixture
def c5() -> Graph:
    return gen_cycle(5)


@pytest.fixture
def c6() -> Graph:
    return gen_cycle(6)


@pytest.fixture
def p4() -> Graph:
    return gen_path(4)


@pytest.fixture
def star4() -> Graph:
    return gen_star(4)


@pytest.fixture
def c6_chord() -> Graph:
    return gen_chordal_pair(0)[0]


@pytest.fixture
def two_triangles() -> Graph:
    return gen_two_triangles_bridge()


@pytest.fixture
def shrikhande() -> Graph:
    return gen_shrikhande()


@pytest.fixture
def rook() -> Graph:
    return gen_rook44()


def random_corpus(count: int, n: int, p: float, seed: int = 0) -> List[Graph]:
    """Seeded G(n, p) graphs."""
    return [Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed + i)) for i in range(count)]


@pytest.fixture
def small_random_graphs() -> List[Graph]:
    return random_corpus(25, 9, 0.35, seed=11)
