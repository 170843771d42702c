import random
from pathlib import Path

import pytest

from lcdcodes.codes import LinearCode, SubfieldLinearCode
from lcdcodes.field import default_field
from lcdcodes.matrix import MatrixFq, expand_vector, rank_of

DATA = Path(__file__).resolve().parent.parent / "data"


def data_file(name: str) -> str:
    return str(DATA / name)


def random_matrix(spec, rng: random.Random, nrows: int, ncols: int) -> MatrixFq:
    return MatrixFq._raw(spec, [[rng.randrange(spec.q) for _ in range(ncols)] for _ in range(nrows)], ncols)


def random_linear_code(spec, rng: random.Random, k: int, n: int) -> LinearCode:
    while True:
        G = random_matrix(spec, rng, k, n)
        if G.rank() == k:
            return LinearCode(G)


def random_subfield_code(spec, rng: random.Random, ell: int, n: int) -> SubfieldLinearCode:
    assert ell <= 2 * n
    while True:
        G = random_matrix(spec, rng, ell, n)
        if rank_of(spec, [expand_vector(spec, r) for r in G.indices], 2 * n) == ell:
            return SubfieldLinearCode(G)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def F4():
    return default_field(4)


@pytest.fixture(scope="session")
def F9():
    return default_field(9)


@pytest.fixture(scope="session")
def F25():
    return default_field(25)


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def record(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
