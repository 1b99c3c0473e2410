import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from liecocycle import fixtures as F  # noqa: E402
from liecocycle.cohomology import TwoCochain, ce_d1  # noqa: E402
from liecocycle.lie_core import LieAlgebra  # noqa: E402


def so3_plus_r():
    """``so(3) + R``, the smallest shipped-adjacent algebra with non-cocycle 2-cochains."""
    return LieAlgebra.from_brackets(
        4, {(0, 1): {2: 1.0}, (1, 2): {0: 1.0}, (2, 0): {1: 1.0}}, name="so3+R"
    )


def algebra_cocycle_pairs():
    """Every algebra shipped with a cocycle on it, including coboundary ones."""
    so3, sl2, gal = F.so3(), F.sl2(), F.galilei_1d()
    return [
        ("heisenberg", F.abelian(2), F.heisenberg_cocycle()),
        ("abelian3", F.abelian(3), TwoCochain.from_entries(3, {(0, 1): 1.0, (1, 2): -0.5})),
        ("so3_cob", so3, ce_d1(so3, [0.0, 0.0, 1.0])),
        ("sl2_cob", sl2, ce_d1(sl2, [0.3, -0.7, 1.1])),
        ("galilei_mass", gal, F.galilei_mass_cocycle()),
        ("galilei_mixed", gal, TwoCochain.from_entries(3, {(0, 1): 0.4, (0, 2): -1.2, (1, 2): 0.8})),
    ]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
