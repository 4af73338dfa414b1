"""Shared fixtures: each ring of the test corpus is built once per session."""

import pytest

from ringline import build_ring_from_text, enumerate_points, jacobson_radical
from ringline.homs import quotient_ring


@pytest.fixture(scope="session")
def r_cubic():
    """GF(2)[x]/(x^3-x): the 8-element showcase ring."""
    return build_ring_from_text("GF(2)[x]/(x^3-x)")


@pytest.fixture(scope="session")
def cubic_line(r_cubic):
    return enumerate_points(r_cubic)


@pytest.fixture(scope="session")
def quot_j(r_cubic):
    return quotient_ring(r_cubic, jacobson_radical(r_cubic), label="J")


@pytest.fixture(scope="session")
def quot_j_line(quot_j):
    return enumerate_points(quot_j.ring)


@pytest.fixture(scope="session")
def gf2():
    return build_ring_from_text("GF(2)")


@pytest.fixture(scope="session")
def gf2_line(gf2):
    return enumerate_points(gf2)


@pytest.fixture(scope="session")
def gf2xgf2():
    return build_ring_from_text("GF(2)*GF(2)")


def pair_of(ring, a_name, b_name):
    return (ring.parse_element(a_name), ring.parse_element(b_name))


def point_of(line, a_name, b_name):
    return line.point_for(pair_of(line.ring, a_name, b_name))
