from fractions import Fraction
from pathlib import Path

import pytest

from plektonlab.sectors import AnyonModel, CyclotomicPhase

ASSETS = Path(__file__).resolve().parent.parent / "assets"


@pytest.fixture
def fermion():
    return AnyonModel(2, CyclotomicPhase.from_pair(1, 2),
                      CyclotomicPhase.from_pair(1, 4), Fraction(1, 2), mass=1.0)


@pytest.fixture
def z3():
    return AnyonModel(3, CyclotomicPhase.from_pair(1, 3),
                      CyclotomicPhase.from_pair(2, 3), Fraction(1, 3), mass=1.0)


@pytest.fixture
def boson():
    return AnyonModel(None, CyclotomicPhase.from_pair(0, 1),
                      CyclotomicPhase.from_pair(0, 1), Fraction(0), mass=1.0)


@pytest.fixture
def semion():
    # Z_4 with omega = i
    return AnyonModel(4, CyclotomicPhase.from_pair(1, 4),
                      CyclotomicPhase.from_pair(1, 8), Fraction(1, 4))
