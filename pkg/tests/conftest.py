import math

import pytest
from hypothesis import settings

from parapoly.conics import Conic
from parapoly.geometry import Circle, Point

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

S2, S3, S6 = math.sqrt(2.0), math.sqrt(3.0), math.sqrt(6.0)

# closed forms, worked by hand: subtracting the two parabolas factors as
# (x - y)(x + y - 1), and each factor meets x^2 + y = 5/4 in two points
W1_VERTICES = {
    "a": Point((-1 + S6) / 2, (-1 + S6) / 2),
    "b": Point((1 + S2) / 2, (1 - S2) / 2),
    "c": Point((-1 - S6) / 2, (-1 - S6) / 2),
    "d": Point((1 - S2) / 2, (1 + S2) / 2),
}


@pytest.fixture
def k0():
    return Circle(Point(0.0, 0.0), 1.0)


@pytest.fixture
def pi1():
    return Conic((1, 0, 0, 0, 1, -1.25), inside_witness=Point(0, 0))


@pytest.fixture
def pi2():
    return Conic((0, 0, 1, 1, 0, -1.25), inside_witness=Point(0, 0))


@pytest.fixture
def pi3():
    return Conic((1, 0, 0, 0, -1, 0), inside_witness=Point(0, 1))


@pytest.fixture
def w1_vertices():
    return list(W1_VERTICES.values())


@pytest.fixture
def w2_points():
    return [Point(-2, 4), Point(-1, 1), Point(1, 1), Point(2, 4)]


def close(p: Point, q: Point, eps: float = 1e-12) -> bool:
    return math.hypot(p.x - q.x, p.y - q.y) <= eps


def matches(found, expected, eps=1e-12) -> bool:
    """Every expected point has a distinct match in ``found``."""
    left = list(found)
    if len(left) != len(expected):
        return False
    for q in expected:
        hit = next((p for p in left if close(p, q, eps)), None)
        if hit is None:
            return False
        left.remove(hit)
    return True
