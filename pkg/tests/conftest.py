import random

import pytest

from pseudomodel.formula import Formula, parse_dimacs
from pseudomodel.generators import gen_monotone_l_regular, gen_random

EXAMPLE_DIMACS = """c worked example on a1..a5
p cnf 5 4
1 2 3 0
1 2 -5 0
-1 2 -3 4 0
-3 -4 -5 0
"""


@pytest.fixture
def example():
    return parse_dimacs(EXAMPLE_DIMACS)


@pytest.fixture
def example_path(tmp_path):
    path = tmp_path / "example.cnf"
    path.write_text(EXAMPLE_DIMACS)
    return str(path)


def edge_cases():
    return [
        Formula(3, ()),
        Formula(2, ((),)),
        Formula(3, ((1, -2), ())),
        Formula(6, ((1, 2), (-2, 3))),
        Formula(4, ((1, -2), (2, -3), (3, -4), (4, -1))),
        Formula(4, ((1, -2), (-1, 2), (3, 4), (-3, -4))),
        gen_monotone_l_regular(5, 2, 4, seed=3),
        Formula(3, ((1, 2, 3),)),
        Formula(1, ((1,), (-1,))),
        Formula(0, ()),
    ]


def random_corpus(count=200, seed=2024):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, 10)
        m = rng.randint(1, 12)
        out.append(gen_random(n, m, 1, min(4, n), seed=seed * 1000 + i))
    return out


def corpus():
    return random_corpus() + edge_cases()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title = RESULTS[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
