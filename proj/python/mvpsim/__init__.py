"""Operation-counting simulator of a mechanical matrix-vector processor."""

from ._core import (
    AxisLadderMvp,
    Backend,
    BitMatrix,
    BitVector,
    InputError,
    LadderPosition,
    Mode,
    MvpMachine,
    OpCategory,
    OpLog,
    ParseError,
    RunReport,
    StateError,
    WallLightMvp,
    make_machine,
    matmul,
    matvec,
    oracle_matmul,
    oracle_matvec,
    parse_matrix,
    parse_vector,
    run_selftest,
    serialize_matrix,
    serialize_vector,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
