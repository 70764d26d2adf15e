import pytest

from ensemble.builders import ContinuumSpec, LatticeBoxSpec, TreeSpec
from measures.cauchy import CauchyKernel
from measures.spectral import EnergyGrid


@pytest.fixture
def kernel():
    return CauchyKernel(1.0)


@pytest.fixture
def chain():
    return LatticeBoxSpec(1, 24)


@pytest.fixture
def tree():
    return TreeSpec(2, 4)


@pytest.fixture
def continuum():
    return ContinuumSpec(8, 0.25)


@pytest.fixture
def grid():
    return EnergyGrid(-3.0, 3.0, 0.5)


@pytest.fixture
def out_dir(tmp_path):
    """Directory for command outputs and their manifests."""
    return tmp_path
