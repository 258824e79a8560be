from __future__ import annotations

from pathlib import Path

import pytest

from grasp.graph import load_graph
from grasp.pipeline import summarize_graph

DATA = Path(__file__).parent / "data"


def load_social():
    return load_graph((DATA / "gsn_nodes.txt").read_text(),
                      (DATA / "gsn_edges.txt").read_text())


@pytest.fixture(scope="session")
def gsn():
    return load_social()


@pytest.fixture(scope="session")
def gsn_target(gsn):
    return summarize_graph(gsn, mode="target")


@pytest.fixture(scope="session")
def gsn_source(gsn):
    return summarize_graph(gsn, mode="source")
