import sys
from pathlib import Path

import pytest

from maxarc.arcs import dual_arc, extract_design, regular_hyperoval
from maxarc.geometry import build_pg2
from maxarc.gf import Field
from maxarc.resolve import max_compatible_sets, parallel_classes, resolutions

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


class Pipeline:
    """Every stage for the regular hyperoval of PG(2,q), computed once."""

    def __init__(self, q):
        self.plane = build_pg2(Field.of_order(q))
        self.hyperoval = regular_hyperoval(self.plane)
        self.dual_arc = dual_arc(self.plane, self.hyperoval)
        self.design = extract_design(self.dual_arc.plane, self.dual_arc)
        self.classes = parallel_classes(self.design)
        self.resolutions = resolutions(self.design, self.classes)
        self.csets = max_compatible_sets(self.design, self.resolutions, self.classes)


@pytest.fixture(scope="session")
def pg4():
    return Pipeline(4)


@pytest.fixture(scope="session")
def pg16():
    return Pipeline(16)


@pytest.fixture(scope="session")
def pg16_plane(pg16):
    return pg16.plane


@pytest.fixture(scope="session")
def data_dir():
    return DATA
