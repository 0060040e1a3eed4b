"""Quiver, exchange matrix, matrix mutation and seed exchange for the
fixed word family.

Rows are labelled by [-1, -r] u [1, n]; columns by the positions whose
letter reappears later in the word.  The successor of a position is
``k + r`` (or the first occurrence of the letter, for a negative label);
positions whose successor falls past the word use the sentinel n + 1 so
the between-occurrences arrow rule can still be evaluated.

Seed values are the group-cell minors, Laurent polynomials in the torus
and grid variables; one exchange step replaces a value by the exact
quotient demanded by the two-term relation, and exactness is itself the
Laurentness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .laurent import LaurentPoly, exact_div, poly_prod
from .repb import minor_G
from .rootdata import MinorSpec, cartan_matrix, make_minor_spec


class BadDirection(ValueError):
    """Mutation requested at a non-exchangeable label."""


@dataclass(frozen=True)
class ExchangeMatrix:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict[tuple[int, int], int]

    def entry(self, i: int, j: int) -> int:
        return self.entries.get((i, j), 0)

    def principal(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in self.cols] for i in self.cols]

    def text(self) -> str:
        width = max(
            [len(str(v)) for v in self.entries.values()] + [2]
        )
        head = "      " + " ".join(f"{c:>{width}}" for c in self.cols)
        lines = [head]
        for i in self.rows:
            cells = " ".join(f"{self.entry(i, j):>{width}}" for j in self.cols)
            lines.append(f"{i:>5} {cells}")
        return "\n".join(lines) + "\n"

    def json_dict(self) -> dict:
        return {
            "rows": list(self.rows),
            "cols": list(self.cols),
            "entries": [[self.entry(i, j) for j in self.cols] for i in self.rows],
        }


def kplus(spec: MinorSpec, k: int) -> int:
    """Next position carrying the same letter; n + 1 when there is none."""
    if k > 0:
        nxt = k + spec.r
    else:
        nxt = abs(k)
    return nxt if nxt <= spec.n else spec.n + 1


def e_set(spec: MinorSpec) -> tuple[int, ...]:
    return tuple(k for k in range(1, spec.n + 1) if k + spec.r <= spec.n)


def _letter(spec: MinorSpec, k: int) -> int:
    return abs(k) if k < 0 else spec.letter(k)


def _arrow(spec: MinorSpec, u: int, v: int, a) -> int:
    """Arrow direction between labels u < v (v positive): +1 for u -> v,
    -1 for v -> u, 0 for none."""
    if kplus(spec, u) == v:
        return 1
    if v < kplus(spec, u) < kplus(spec, v) and a[_letter(spec, u) - 1][_letter(spec, v) - 1] < 0:
        return -1
    return 0


def build_bmatrix(spec: MinorSpec) -> ExchangeMatrix:
    rows = tuple(range(-1, -spec.r - 1, -1)) + tuple(range(1, spec.n + 1))
    cols = e_set(spec)
    a = cartan_matrix(spec.r)
    entries: dict[tuple[int, int], int] = {}
    for i in rows:
        for j in cols:
            if i == j:
                continue
            u, v = (i, j) if i < j else (j, i)
            direction = _arrow(spec, u, v, a)
            if direction == 0:
                continue
            # orient relative to the (row, col) pair
            forward = direction == 1 if (u, v) == (i, j) else direction == -1
            li, lj = _letter(spec, i), _letter(spec, j)
            if li == lj:
                entries[(i, j)] = 1 if forward else -1
            else:
                entries[(i, j)] = -a[li - 1][lj - 1] if forward else a[li - 1][lj - 1]
    return ExchangeMatrix(rows, cols, entries)


def mutate_matrix(b: ExchangeMatrix, k: int) -> ExchangeMatrix:
    if k not in b.cols:
        raise BadDirection(f"{k} is not an exchangeable label")
    entries: dict[tuple[int, int], int] = {}
    for i in b.rows:
        for j in b.cols:
            if i == k or j == k:
                val = -b.entry(i, j)
            else:
                bik, bkj = b.entry(i, k), b.entry(k, j)
                val = b.entry(i, j) + (abs(bik) * bkj + bik * abs(bkj)) // 2
            if val:
                entries[(i, j)] = val
    return ExchangeMatrix(b.rows, b.cols, entries)


def find_symmetrizer(mat: list[list[int]]) -> list[int] | None:
    """Minimal positive integer diagonal making D.mat skew-symmetric, or
    None when no such diagonal exists."""
    n = len(mat)
    ratio: list[Fraction | None] = [None] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        comp = [start]
        ratio[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j:
                    continue
                bij, bji = mat[i][j], mat[j][i]
                if bij == 0 and bji == 0:
                    continue
                if bij == 0 or bji == 0 or (bij > 0) == (bji > 0):
                    return None
                want = ratio[i] * Fraction(abs(bij), abs(bji))
                if ratio[j] is None:
                    ratio[j] = want
                    comp.append(j)
                    queue.append(j)
                elif ratio[j] != want:
                    return None
        denom_lcm = 1
        for idx in comp:
            q = ratio[idx].denominator
            denom_lcm = denom_lcm * q // gcd(denom_lcm, q)
        nums = []
        for idx in comp:
            ratio[idx] = ratio[idx] * denom_lcm
            nums.append(int(ratio[idx]))
        g = 0
        for v in nums:
            g = gcd(g, v)
        for idx in comp:
            ratio[idx] = ratio[idx] / g
    d = [int(x) for x in ratio]  # type: ignore[arg-type]
    for i in range(n):
        for j in range(n):
            if d[i] * mat[i][j] != -d[j] * mat[j][i]:
                return None
    return d


# -- seeds -------------------------------------------------------------------


@dataclass
class Seed:
    spec: MinorSpec
    matrix: ExchangeMatrix
    cluster: dict[int, LaurentPoly]


def initial_seed(spec: MinorSpec) -> Seed:
    matrix = build_bmatrix(spec)
    cluster = {}
    for label in matrix.rows:
        sub = make_minor_spec(spec.r, spec.n, label)
        cluster[label] = minor_G(sub)
    return Seed(spec, matrix, cluster)


def exchange_step(seed: Seed, k: int) -> Seed:
    """Replace the value at an exchangeable label by the exact quotient of
    the two-term relation and mutate the matrix.  A division failure here
    would mean a convention error, never expected input."""
    if k not in seed.matrix.cols:
        raise BadDirection(f"{k} is not an exchangeable label")
    plus = poly_prod(
        seed.cluster[i] ** seed.matrix.entry(i, k)
        for i in seed.matrix.rows
        if seed.matrix.entry(i, k) > 0
    )
    minus = poly_prod(
        seed.cluster[i] ** -seed.matrix.entry(i, k)
        for i in seed.matrix.rows
        if seed.matrix.entry(i, k) < 0
    )
    new_value = exact_div(plus + minus, seed.cluster[k])
    cluster = dict(seed.cluster)
    cluster[k] = new_value
    return Seed(seed.spec, mutate_matrix(seed.matrix, k), cluster)
