import functools
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mullat import chain_order, enumerate_mul_lattices, new_mul_lattice, sample_mul_lattices, three_element_monoid
from mullat.instances import ring_ideal_lattice, zn_ring

CORPUS_SEED = 20240611


@functools.lru_cache(maxsize=None)
def small_corpus():
    """Every multiplicative lattice with at most 4 elements."""
    return tuple(enumerate_mul_lattices(4))


@functools.lru_cache(maxsize=None)
def random_corpus(count=1000):
    return tuple(sample_mul_lattices(count, CORPUS_SEED, sizes=(6, 7)))


@pytest.fixture
def L3():
    return three_element_monoid()


@pytest.fixture
def B2():
    return new_mul_lattice(chain_order(2), [[0, 0], [0, 1]])


@pytest.fixture
def Z12():
    return ring_ideal_lattice(zn_ring(12))


def zero_mult(order):
    return new_mul_lattice(order, np.full((order.n, order.n), order.bottom))


def ideal_of(inst, d, n):
    """Element of a Z/n ideal lattice instance for the ideal (d)."""
    return inst.element({k * d % n for k in range(n)})


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _criteria[num] = (title, rep.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        title, outcome = _criteria[num]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {verdict}  {title}")
