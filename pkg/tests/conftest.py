import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from torusk.charmap import CharMatrix  # noqa: E402
from torusk.nerve import NerveComplex  # noqa: E402
from torusk.presentation import ManifoldSpec  # noqa: E402
from torusk.specdoc import bott, hirzebruch, product, simplex  # noqa: E402

TRIANGLE = [(1, 2), (2, 3), (1, 3)]
SQUARE = [(1, 2), (2, 3), (3, 4), (1, 4)]
CP2_ROWS = [(1, 0), (0, 1), (-1, -1)]
BOTT_UPPER = [[1, 1, 2], [0, 1, -1], [0, 0, 1]]


def shipped_examples():
    """Every example the acceptance criteria quantify over, by name."""
    out = {f"simplex({n})": simplex(n) for n in range(1, 5)}
    out.update({f"hirzebruch({k})": hirzebruch(k) for k in range(4)})
    out["bott"] = bott(BOTT_UPPER)
    out["product(simplex(1),simplex(1))"] = product(simplex(1), simplex(1))
    out["product(simplex(1),simplex(2))"] = product(simplex(1), simplex(2))
    return out


@pytest.fixture
def triangle():
    return NerveComplex(3, TRIANGLE)


@pytest.fixture
def square():
    return NerveComplex(4, SQUARE)


@pytest.fixture
def cp2(triangle):
    return ManifoldSpec(triangle, CharMatrix(CP2_ROWS))


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, label, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {label}: {detail}")
