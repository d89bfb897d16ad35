"""Shared fixtures: small named graphs used across the suite."""

import functools

import pytest

import swapdeck.cli
import swapdeck.swap
from swapdeck import Graph
from swapdeck.families import FamilyKind, FamilySpec, build, complete, cycle, hypercube


def _replaying(search):
    """Wrap a swap search so every witness it returns is replayed on its host."""

    @functools.wraps(search)
    def wrapper(g, *args, **kwargs):
        witness = search(g, *args, **kwargs)
        assert witness is None or witness.verify(g), f"unsound witness {witness} for {g}"
        return witness

    return wrapper


@pytest.fixture(autouse=True)
def sound_swap_witnesses(monkeypatch):
    """Every witness produced during a test must pass SwapWitness.verify."""
    monkeypatch.setattr(swapdeck.swap, "find_swap", _replaying(swapdeck.swap.find_swap))
    monkeypatch.setattr(swapdeck.swap, "_pair_swap", _replaying(swapdeck.swap._pair_swap))
    monkeypatch.setattr(swapdeck.cli, "find_swap", _replaying(swapdeck.cli.find_swap))


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def c5() -> Graph:
    return cycle(5)


@pytest.fixture
def c6() -> Graph:
    return cycle(6)


@pytest.fixture
def k4() -> Graph:
    return complete(4)


@pytest.fixture
def q3() -> Graph:
    return hypercube(3)


@pytest.fixture
def octahedron() -> Graph:
    """K_6 - M."""
    return build(FamilySpec(FamilyKind.KN_MINUS_MATCHING, 6)).graph


@pytest.fixture
def prism() -> Graph:
    """K_6 - H, the triangular prism."""
    return build(FamilySpec(FamilyKind.KN_MINUS_HAMILTONIAN, 6)).graph


@pytest.fixture
def p4() -> Graph:
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def claw() -> Graph:
    """K_1,3."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
