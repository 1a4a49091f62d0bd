import os

import pytest

from igelkit.cli.app import main
from igelkit.core.config import ConfigManager
from igelkit.core.families import gen_cycle, gen_disjoint_union

DATA_DIR = os.getenv("IGELKIT_DATA_DIR") or os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


def dataset_path(name):
    path = os.path.join(DATA_DIR, name)
    if not os.path.exists(path):
        pytest.skip(f"{name} not found in {DATA_DIR}; run fetch_datasets.py")
    return path


@pytest.fixture
def config(tmp_path, monkeypatch):
    monkeypatch.delenv("IGELKIT_THREADS", raising=False)
    return ConfigManager(config_dir=str(tmp_path / "config"))


@pytest.fixture
def run_cli(config):
    def run(*argv):
        return main([str(a) for a in argv], config=config)
    return run


@pytest.fixture
def two_triangles():
    triangle = gen_cycle(3)
    return gen_disjoint_union(triangle, triangle)
