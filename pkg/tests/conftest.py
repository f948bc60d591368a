import random

import pytest

from superhopf import catalog
from superhopf.axioms import mul_vec
from superhopf.catalog.transcribe import letters, parse_tensor
from superhopf.graded import UNIT, _add_into
from superhopf.scalar import ONE, GaussScalar


def element(data, word):
    """Coefficient dict of a word in the record's labelled generators."""
    v = {UNIT: ONE}
    for name in letters(word):
        v = mul_vec(data.mult.entries, v, data.labels[name])
    return v


def tensor(data, formula):
    acc = {}
    for c, left, right in parse_tensor(formula):
        for a, x in element(data, left).items():
            for b, y in element(data, right).items():
                _add_into(acc, (a, b), c * x * y)
    return acc


def apply(data, vec, fn):
    """Apply a basis-level map ``fn(b) -> dict`` linearly to ``vec``."""
    acc = {}
    for b, c in vec.items():
        for k, x in fn(b).items():
            _add_into(acc, k, c * x)
    return acc


def random_scalar(rng):
    return GaussScalar(f"{rng.randint(-9, 9)}/{rng.randint(1, 4)}",
                       f"{rng.randint(-9, 9)}/{rng.randint(1, 4)}")


@pytest.fixture(scope="session")
def cat():
    return catalog.default()


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if "test_acceptance.py::test_criterion_" in rep.nodeid and rep.when == "call":
                name = rep.nodeid.split("::test_criterion_")[1]
                lines.append((int(name.split("_")[0]), name, "PASS" if rep.passed else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for n, name, verdict in sorted(lines):
            terminalreporter.write_line(f"criterion {n}: {verdict}  {name.split('_', 1)[1]}")
