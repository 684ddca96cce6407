import pathlib

import pytest

from geothue import builders
from geothue.pregroup import load_pregroup
from geothue.systems import load_system

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def fixture_path(name: str) -> pathlib.Path:
    return FIXTURES / name


def words_of(alphabet, *texts):
    return tuple(alphabet.word(t) for t in texts)


@pytest.fixture(scope="session")
def geoper_S():
    return load_system(fixture_path("geoper_S.rws"))


@pytest.fixture(scope="session")
def geoper_T():
    return load_system(fixture_path("geoper_T.rws"))


@pytest.fixture(scope="session")
def gpex():
    return load_system(fixture_path("gpex.rws"))


@pytest.fixture(scope="session")
def tits_d3():
    return load_system(fixture_path("tits_d3.rws"))


@pytest.fixture(scope="session")
def free_ab():
    return load_system(fixture_path("free_ab.rws"))


@pytest.fixture(scope="session")
def z2_graph():
    return load_system(fixture_path("z2_graph.rws"))


@pytest.fixture(scope="session")
def z2z2():
    return load_system(fixture_path("z2z2.rws"))


@pytest.fixture(scope="session")
def z2z2_group():
    return load_system(fixture_path("z2z2_group.rws"))


@pytest.fixture(scope="session")
def amalgam_data():
    return builders.example_amalgam()


@pytest.fixture(scope="session")
def hnn_data():
    return builders.example_hnn()


@pytest.fixture(scope="session")
def amalgam_pregroup():
    return load_pregroup(fixture_path("amalgam_z4z6.pg"))


@pytest.fixture(scope="session")
def hnn_pregroup():
    return load_pregroup(fixture_path("hnn_s3.pg"))
