"""Access to the data files shipped with the package.

Matrices are parity checks of the worked example codes; set files are the
worked example vector sets; code_tables.csv is the curated best-known-codes
snapshot. The default snapshot can be overridden through the
SHLINEAR_SNAPSHOT environment variable.
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path
from typing import List

from . import bounds, fileio
from .bounds import CodeTableEntry
from .linalg import FqMatrix
from .shset import ShSetCandidate

SNAPSHOT_ENV = "SHLINEAR_SNAPSHOT"

PARITY_F5_8X12 = "parity_f5_8x12.mat"          # [12,4,7] code over F_5
PARITY_F2_8X14 = "parity_f2_8x14.mat"          # [14,6,5] binary code
PARITY_F2_8X8 = "parity_f2_8x8.mat"            # rank-6 check of an [8,2,5] binary code
SET_F3_R3 = "set_f3_r3_with_zero.set"          # tiny dependent but S_h-linear set
SET_F3_R5 = "set_f3_r5_sidon_not_linear.set"   # plain S_2-set that is not S_2-linear
SET_F2_R10 = "set_f2_r10_s3.set"               # 15-element S_3-linear set
SET_F3_R9 = "set_f3_r9_s3.set"                 # 14-element translation counterexample
SET_F5_R12 = "set_f5_r12_s3.set"               # 8-element S_3-linear set, no zero
SNAPSHOT = "code_tables.csv"

ALL_FIXTURES = (
    PARITY_F5_8X12,
    PARITY_F2_8X14,
    PARITY_F2_8X8,
    SET_F3_R3,
    SET_F3_R5,
    SET_F2_R10,
    SET_F3_R9,
    SET_F5_R12,
    SNAPSHOT,
)


def fixture_path(name: str) -> Path:
    path = resources.files("shlinear").joinpath("data", name)
    return Path(str(path))


def load_fixture_matrix(name: str) -> FqMatrix:
    return fileio.load_matrix(fixture_path(name))


def load_fixture_set(name: str, h: int) -> ShSetCandidate:
    return fileio.load_set(fixture_path(name), h)


def default_snapshot_path() -> Path:
    override = os.environ.get(SNAPSHOT_ENV)
    if override:
        return Path(override)
    return fixture_path(SNAPSHOT)


def load_snapshot(path=None) -> List[CodeTableEntry]:
    return bounds.ingest_table(path if path is not None else default_snapshot_path())
