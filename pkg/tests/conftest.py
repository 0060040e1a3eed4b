"""Shared frozen values used across the test modules."""

from fractions import Fraction

import pytest

from bminors.laurent import LaurentPoly, yvar


def _y3(s, j):
    return yvar(s, j, 3)


def golden_vector_minor() -> LaurentPoly:
    """The 14-monomial minor for rank 3, word (1,2,3,1,2,3,1,2), k = 5."""
    Y = _y3
    terms = [
        Y(3, 2) ** -1,
        Y(2, 2) / (Y(3, 1) * Y(2, 3) ** 2),
        2 * Y(1, 3) / (Y(3, 1) * Y(2, 3)),
        Y(1, 3) ** 2 / (Y(3, 1) * Y(2, 2)),
        Y(1, 2) / (Y(3, 1) * Y(2, 1)),
        Y(1, 1) / Y(3, 1),
        Y(2, 1) / Y(2, 3) ** 2,
        2 * Y(2, 1) * Y(1, 3) / (Y(2, 2) * Y(2, 3)),
        Y(2, 1) * Y(1, 3) ** 2 / Y(2, 2) ** 2,
        2 * Y(1, 2) / Y(2, 2),
        Y(2, 1) * Y(1, 1) / Y(2, 2),
        2 * Y(1, 2) / (Y(2, 3) * Y(1, 3)),
        Y(1, 2) ** 2 / (Y(1, 3) ** 2 * Y(2, 1)),
        Y(1, 2) * Y(1, 1) / Y(1, 3) ** 2,
    ]
    out = LaurentPoly.zero()
    for t in terms:
        out = out + t
    return out


def golden_path_labels() -> list[LaurentPoly]:
    """Labels of the 15 paths for the same spec, in enumeration order of
    the worked example (p_1 .. p_15)."""
    Y = _y3
    return [
        Y(3, 2) ** -1,
        Y(2, 2) / (Y(3, 1) * Y(2, 3) ** 2),
        2 * Y(1, 3) / (Y(3, 1) * Y(2, 3)),
        Y(1, 3) ** 2 / (Y(3, 1) * Y(2, 2)),
        Y(1, 2) / (Y(3, 1) * Y(2, 1)),
        Y(1, 1) / Y(3, 1),
        Y(2, 1) / Y(2, 3) ** 2,
        2 * Y(2, 1) * Y(1, 3) / (Y(2, 2) * Y(2, 3)),
        Y(2, 1) * Y(1, 3) ** 2 / Y(2, 2) ** 2,
        Y(1, 2) / Y(2, 2),
        Y(2, 1) * Y(1, 1) / Y(2, 2),
        2 * Y(1, 2) / (Y(2, 3) * Y(1, 3)),
        Y(1, 2) / Y(2, 2),
        Y(1, 2) ** 2 / (Y(2, 1) * Y(1, 3) ** 2),
        Y(1, 1) * Y(1, 2) / Y(1, 3) ** 2,
    ]


def golden_spin_minor() -> LaurentPoly:
    """The three-term spin minor for rank 2, word (1,2,1,2), k = 2."""
    Y = lambda s, j: yvar(s, j, 2)
    return Y(2, 2) ** -1 + Y(1, 2) / Y(2, 1) + Y(1, 1) / Y(1, 2)


@pytest.fixture
def golden_minor():
    return golden_vector_minor()


@pytest.fixture
def golden_spin():
    return golden_spin_minor()


def rational_point(rng, variables):
    """Random nonzero rational assignment for a variable collection."""
    point = {}
    for v in variables:
        num = rng.choice([x for x in range(-7, 8) if x != 0])
        den = rng.randint(1, 7)
        point[v] = Fraction(num, den)
    return point
