"""Shared fixtures: permutations from the worked examples and an isolated sweep config."""

import pytest

from schubert_complexity.config import SweepConfig
from schubert_complexity.perm_core import parse


@pytest.fixture
def w45231():
    return parse("45231")


@pytest.fixture
def hook_w():
    """Toric, L'(w) is a single 3 x 3 hook."""
    return parse("251346")


@pytest.fixture
def kl_pair():
    return parse("43125"), parse("53412")


@pytest.fixture
def toric_interval():
    return parse("12435"), parse("41325")


@pytest.fixture
def sweep_config(tmp_path):
    def make(n: int, jobs: int = 1, write_reports: bool = False) -> SweepConfig:
        return SweepConfig(
            n_override=n,
            jobs=jobs,
            report_dir=tmp_path,
            write_reports=write_reports,
        )

    return make
