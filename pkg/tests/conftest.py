import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringua import (
    RingSpec,
    load_ring,
    make_boolean_ring,
    make_cyclic_ring,
    make_matrix_ring,
    make_triangular_ring,
    members_to_mask,
)
from ringua.sublang import default_system

FIXTURE_DIR = Path(__file__).parent.parent / "src" / "ringua" / "fixtures"


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / name


@pytest.fixture(scope="session")
def z1():
    return make_cyclic_ring(1)


@pytest.fixture(scope="session")
def z4():
    return make_cyclic_ring(4)


@pytest.fixture(scope="session")
def z6():
    return make_cyclic_ring(6)


@pytest.fixture(scope="session")
def z8():
    return make_cyclic_ring(8)


@pytest.fixture(scope="session")
def bool2():
    return make_boolean_ring(2)


@pytest.fixture(scope="session")
def bool3():
    return make_boolean_ring(3)


@pytest.fixture(scope="session")
def m2f2():
    return make_matrix_ring(make_cyclic_ring(2))


def build_triangular() -> RingSpec:
    """Tops Z/4 and Z/2, bimodule Z/2 with reduction-mod-2 left action."""
    left_action = [[(r % 2) * m % 2 for m in range(2)] for r in range(4)]
    right_action = [[m * s % 2 for s in range(2)] for m in range(2)]
    return make_triangular_ring(
        make_cyclic_ring(4), make_cyclic_ring(2), 2, left_action, right_action
    )


@pytest.fixture(scope="session")
def triangular():
    return build_triangular()


@pytest.fixture(scope="session")
def f2xy():
    return load_ring(fixture_path("f2xy.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def fixture_rings(z4, z6, bool2, m2f2, triangular, f2xy):
    """The named rings the acceptance criteria quantify over."""
    return {
        "z4": z4,
        "z6": z6,
        "bool2": bool2,
        "m2_f2": m2f2,
        "triangular": triangular,
        "f2xy": f2xy,
    }


# M2(Z/2) element indices for [[a,b],[c,d]] are ((a*2+b)*2+c)*2+d.
UPPER_ROW_MASK = members_to_mask([0, 4, 8, 12])  # matrices with zero bottom row
LEFT_COLUMN_MASK = members_to_mask([0, 2, 8, 10])  # matrices with zero right column


@pytest.fixture(scope="session")
def system():
    return default_system()


@pytest.fixture(scope="session")
def core_pool():
    text = fixture_path("core_sentences.txt").read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="session")
def general_pool():
    text = fixture_path("general_sentences.txt").read_text(encoding="utf-8")
    return [line for line in text.splitlines() if line.strip()]
