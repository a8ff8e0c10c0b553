import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import shlinear as sl
from shlinear import fixtures


@pytest.fixture(scope="session")
def f2():
    return sl.make_field(2)


@pytest.fixture(scope="session")
def f3():
    return sl.make_field(3)


@pytest.fixture(scope="session")
def f5():
    return sl.make_field(5)


@pytest.fixture(scope="session")
def f5_parity():
    """8x12 parity check of a [12,4,7] code over F_5."""
    return fixtures.load_fixture_matrix(fixtures.PARITY_F5_8X12)


@pytest.fixture(scope="session")
def f2_parity_14():
    """8x14 parity check of a [14,6,5] binary code."""
    return fixtures.load_fixture_matrix(fixtures.PARITY_F2_8X14)


@pytest.fixture(scope="session")
def f2_parity_8():
    """8x8 rank-6 parity check of an [8,2,5] binary code."""
    return fixtures.load_fixture_matrix(fixtures.PARITY_F2_8X8)


@pytest.fixture(scope="session")
def f5_code(f5_parity):
    code = sl.from_parity_check(f5_parity)
    sl.min_distance(code)
    return code


@pytest.fixture(scope="session")
def f2_code_14(f2_parity_14):
    code = sl.from_parity_check(f2_parity_14)
    sl.min_distance(code)
    return code


@pytest.fixture(scope="session")
def f2_code_8(f2_parity_8):
    code = sl.from_parity_check(f2_parity_8)
    sl.min_distance(code)
    return code


@pytest.fixture(scope="session")
def tiny_ternary_set():
    """{0, (1,1,0), (0,1,0)} in F_3^3: dependent yet S_h-linear for h <= 3."""
    return fixtures.load_fixture_set(fixtures.SET_F3_R3, 2)


@pytest.fixture(scope="session")
def sidon_gap_set():
    """Four vectors in F_3^5: a plain S_2-set that is not S_2-linear."""
    return fixtures.load_fixture_set(fixtures.SET_F3_R5, 2)


@pytest.fixture(scope="session")
def binary_s3_set():
    """15 vectors in F_2^10: S_3-linear, dependent, not S_4-linear."""
    return fixtures.load_fixture_set(fixtures.SET_F2_R10, 3)


@pytest.fixture(scope="session")
def ternary_r9_set():
    """14 vectors (with 0) in F_3^9: translation counterexample input."""
    return fixtures.load_fixture_set(fixtures.SET_F3_R9, 3)


@pytest.fixture(scope="session")
def f5_r12_set():
    """8 vectors (no 0) in F_5^12: S_3-linear translation counterexample input."""
    return fixtures.load_fixture_set(fixtures.SET_F5_R12, 3)


@pytest.fixture(scope="session")
def snapshot_entries():
    return fixtures.load_snapshot()
