import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from cmgraphs.graphio import parse_graph_file
from cmgraphs.pairing import find_star_labeling
from cmgraphs.transform import BGraftSpec, BipartiteBlock

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
FIXTURES = os.path.join(ROOT, "fixtures")
GOLDEN = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")
SCHEMA = os.path.join(ROOT, "schema", "analysis-v1.json")


def fixture_path(name):
    return os.path.join(FIXTURES, name)


def golden_path(name):
    return os.path.join(GOLDEN, name)


@pytest.fixture(scope="session")
def ex31():
    return parse_graph_file(fixture_path("example3_1.graph")).graph


@pytest.fixture(scope="session")
def ex31_pl(ex31):
    return find_star_labeling(ex31)


@pytest.fixture(scope="session")
def c4():
    return parse_graph_file(fixture_path("c4.graph")).graph


@pytest.fixture(scope="session")
def c4_pl(c4):
    return find_star_labeling(c4)


@pytest.fixture(scope="session")
def graft_spec():
    h0 = parse_graph_file(fixture_path("example5_1.h0.graph")).graph
    blocks = []
    for i in (1, 2, 3):
        parsed = parse_graph_file(fixture_path(f"example5_1.b{i}.graph"))
        blocks.append(BipartiteBlock(parsed.graph, parsed.xside, parsed.yside))
    return BGraftSpec(h0, tuple(blocks))
