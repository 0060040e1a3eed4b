"""Torus-coordinate changes between the two cell parametrizations.

``phi`` rewrites a point of (torus) x (grid) so that the plain
lowering-generator product lands on the same group element as the
negative-elements product; ``psi`` is its inverse, recovered position by
position from the back of the word.  Both act on exact rationals; the
symbolic content is certified by comparing the two operator products on
the vector representation at random rational points.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .repb import LinOp, op_torus, op_y, x_minus_vector
from .rootdata import MinorSpec


@dataclass(frozen=True)
class TorusPoint:
    """Exact rational coordinates: ``a`` on the torus (coweight entries),
    ``y`` on the grid, every entry nonzero."""

    a: tuple[Fraction, ...]
    y: dict[tuple[int, int], Fraction]

    def __post_init__(self):
        if any(x == 0 for x in self.a) or any(v == 0 for v in self.y.values()):
            raise ValueError("torus points must have nonzero coordinates")

    def json_dict(self) -> dict:
        return {
            "a": [str(x) for x in self.a],
            "y": {f"Y_{s}_{j}": str(v) for (s, j), v in sorted(self.y.items())},
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> "TorusPoint":
        a = tuple(Fraction(x) for x in data["a"])
        y = {}
        for name, v in data["y"].items():
            _, s, j = name.split("_")
            y[(int(s), int(j))] = Fraction(v)
        return TorusPoint(a, y)


def grid_positions(spec: MinorSpec) -> list[tuple[int, int]]:
    """(cycle, column) pairs of the word, in word order."""
    return [(spec.cycle_of(pos), spec.letter(pos)) for pos in range(1, spec.n + 1)]


def _getval(y: Mapping[tuple[int, int], Fraction], s: int, j: int, spec: MinorSpec) -> Fraction:
    """Grid lookup reading column 0 and positions past the word as 1."""
    if j == 0:
        return Fraction(1)
    if (s, j) not in y:
        return Fraction(1)
    return y[(s, j)]


def _colprod(y, rows, j, spec) -> Fraction:
    out = Fraction(1)
    for s in rows:
        out *= _getval(y, s, j, spec)
    return out


def phi(point: TorusPoint, spec: MinorSpec) -> TorusPoint:
    """Forward change of variables; division-free in the input grid apart
    from the distinguished leading entry of each position."""
    r, m = spec.r, spec.m
    y = point.y
    out: dict[tuple[int, int], Fraction] = {}
    for s, l in grid_positions(spec):
        below = range(s + 1, m + 1)
        here_down = range(s, m + 1)
        if l <= r - 2:
            num = _colprod(y, below, l - 1, spec) * _colprod(y, here_down, l + 1, spec)
            den = _getval(y, s, l, spec) * _colprod(y, below, l, spec) ** 2
        elif l == r - 1:
            num = _colprod(y, below, r - 2, spec) * _colprod(y, here_down, r, spec) ** 2
            den = _getval(y, s, r - 1, spec) * _colprod(y, below, r - 1, spec) ** 2
        else:  # l == r
            num = _colprod(y, below, r - 1, spec)
            den = _getval(y, s, r, spec) * _colprod(y, below, r, spec) ** 2
        out[(s, l)] = num / den
    a = list(point.a)
    for s, l in grid_positions(spec):
        a[l - 1] /= y[(s, l)]
    return TorusPoint(tuple(a), out)


def psi(point: TorusPoint, spec: MinorSpec) -> TorusPoint:
    """Inverse change of variables, solved back to front: each position's
    forward formula involves that position only through one factor, so it
    unwinds against the already-recovered later positions."""
    r, m = spec.r, spec.m
    yp = point.y
    rec: dict[tuple[int, int], Fraction] = {}
    for s, l in reversed(grid_positions(spec)):
        below = range(s + 1, m + 1)
        here_down = range(s, m + 1)
        if l <= r - 2:
            num = _colprod(rec, below, l - 1, spec) * _colprod(rec, here_down, l + 1, spec)
            den = _colprod(rec, below, l, spec) ** 2
        elif l == r - 1:
            num = _colprod(rec, below, r - 2, spec) * _colprod(rec, here_down, r, spec) ** 2
            den = _colprod(rec, below, r - 1, spec) ** 2
        else:
            num = _colprod(rec, below, r - 1, spec)
            den = _colprod(rec, below, r, spec) ** 2
        rec[(s, l)] = num / (yp[(s, l)] * den)
    a = list(point.a)
    for s, l in grid_positions(spec):
        a[l - 1] *= rec[(s, l)]
    return TorusPoint(tuple(a), rec)


# -- operator products -------------------------------------------------------


def xL_operator(spec: MinorSpec, y: Mapping[tuple[int, int], object]) -> LinOp:
    """Product of negative one-parameter elements along the word; the last
    letter acts first."""
    r = spec.r
    out = None
    for s, l in grid_positions(spec):
        op = x_minus_vector(l, y[(s, l)], r)
        out = op if out is None else out.compose(op)
    assert out is not None
    return out


def xG_operator(spec: MinorSpec, a, t: Mapping[tuple[int, int], object]) -> LinOp:
    """Torus element times the plain lowering product along the word."""
    r = spec.r
    out = op_torus(a, r)
    for s, l in grid_positions(spec):
        out = out.compose(op_y(l, t[(s, l)], r))
    return out


def xbarG_operator(spec: MinorSpec, a, y: Mapping[tuple[int, int], object]) -> LinOp:
    return op_torus(a, spec.r).compose(xL_operator(spec, y))


# -- checks ------------------------------------------------------------------


def random_point(spec: MinorSpec, rng: random.Random) -> TorusPoint:
    def fr() -> Fraction:
        num = rng.choice([x for x in range(-7, 8) if x != 0])
        return Fraction(num, rng.randint(1, 7))

    a = tuple(fr() for _ in range(spec.r))
    y = {pos: fr() for pos in grid_positions(spec)}
    return TorusPoint(a, y)


def check_inverse(spec: MinorSpec, point: TorusPoint) -> bool:
    there = phi(point, spec)
    back = psi(there, spec)
    if back != point:
        return False
    out = phi(psi(point, spec), spec)
    return out == point


def check_operator_identity(spec: MinorSpec, point: TorusPoint) -> bool:
    lhs = xbarG_operator(spec, point.a, point.y)
    img = phi(point, spec)
    rhs = xG_operator(spec, img.a, img.y)
    return lhs == rhs
