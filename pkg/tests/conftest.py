import os

import pytest

from mapfibers.ideals import Ideal
from mapfibers.mapfile import load_map_file
from mapfibers.pipeline import PipelineOptions, run_pipeline

MAPS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "maps")


def map_path(name: str) -> str:
    return os.path.join(MAPS_DIR, name)


@pytest.fixture(scope="session")
def quintic_map():
    return load_map_file(map_path("quintic_surface.map"))


@pytest.fixture(scope="session")
def quintic_ideal(quintic_map):
    return Ideal(quintic_map.source, list(quintic_map.forms))


@pytest.fixture(scope="session")
def quintic_result(quintic_map):
    """One full pipeline run shared by everything that inspects the example."""
    return run_pipeline(quintic_map, PipelineOptions(s_max=4),
                        path="maps/quintic_surface.map")


@pytest.fixture(scope="session")
def bpf_map():
    return load_map_file(map_path("base_point_free.map"))


@pytest.fixture(scope="session")
def ngf_map():
    return load_map_file(map_path("non_generically_finite.map"))
