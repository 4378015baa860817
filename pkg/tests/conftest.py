import pytest
from click.testing import CliRunner

from affschubert.core.config import SchubertConfig
from affschubert.lie.rootsys import build_root_system
from affschubert.lie.weyl import CorootElement
from affschubert.order.bruhat import BruhatEngine


@pytest.fixture
def a1():
    return build_root_system("A", 1)


@pytest.fixture
def a2():
    return build_root_system("A", 2)


@pytest.fixture
def b3():
    return build_root_system("B", 3)


@pytest.fixture
def c2():
    return build_root_system("C", 2)


@pytest.fixture
def g2():
    return build_root_system("G", 2)


@pytest.fixture
def engine():
    """A fresh engine so cache state never leaks between tests."""
    return BruhatEngine(SchubertConfig())


@pytest.fixture
def b3_exceptional(b3):
    return CorootElement(b3, (3, 0, -1))


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv("SCHUBERT_CACHE", raising=False)
