"""Type-B root data, the ordered index set J, and reduced-word bookkeeping.

Only the fixed word family is accepted: length-n prefixes of
``(1, 2, ..., r)`` repeated r times.  Barred indices are encoded as
negative integers (``-j`` stands for j-bar); the total order on
``J = {1..r} + {0} + {r-bar..1-bar}`` is exposed through :func:`jrank`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil


class BadShape(ValueError):
    """Word length or position outside the accepted family."""


# -- J index helpers -------------------------------------------------------


def jrank(v: int, r: int) -> int:
    """Rank realizing 1 < 2 < ... < r < 0 < r-bar < ... < 1-bar."""
    if 1 <= v <= r:
        return v - 1
    if v == 0:
        return r
    if -r <= v <= -1:
        return 2 * r + 1 + v  # -r -> r+1, ..., -1 -> 2r
    raise ValueError(f"{v} is not a J index for rank {r}")


def jabs(v: int) -> int:
    return abs(v)


def is_barred(v: int) -> bool:
    return v < 0


def all_jindices(r: int) -> tuple[int, ...]:
    """J in increasing order."""
    return tuple(range(1, r + 1)) + (0,) + tuple(range(-r, 0))


def jindex_text(v: int) -> str:
    return f"b{-v}" if v < 0 else str(v)


# -- Cartan matrix and weights ---------------------------------------------


def cartan_matrix(r: int) -> tuple[tuple[int, ...], ...]:
    """Type-B Cartan matrix: a[r-1][r-2] = -2 is the one doubled entry."""
    if r < 2:
        raise BadShape("rank must be >= 2")
    rows = []
    for i in range(1, r + 1):
        row = []
        for j in range(1, r + 1):
            if i == j:
                row.append(2)
            elif abs(i - j) == 1 and (i, j) != (r, r - 1):
                row.append(-1)
            elif (i, j) == (r, r - 1):
                row.append(-2)
            else:
                row.append(0)
        rows.append(tuple(row))
    return tuple(rows)


Weight = tuple[int, ...]  # coordinates in the fundamental-weight basis


def simple_root(j: int, r: int) -> Weight:
    """alpha_j expanded in fundamental weights (column j of the Cartan matrix)."""
    a = cartan_matrix(r)
    return tuple(a[i][j - 1] for i in range(r))


def weyl_reflect(i: int, lam: Weight, r: int) -> Weight:
    """s_i(lam) = lam - lam(h_i) * alpha_i."""
    alpha = simple_root(i, r)
    c = lam[i - 1]
    return tuple(lam[t] - c * alpha[t] for t in range(r))


def weyl_apply(word: tuple[int, ...], lam: Weight, r: int) -> Weight:
    """Apply s_{word[0]} ... s_{word[-1]} to lam; the last letter acts first."""
    out = lam
    for i in reversed(word):
        out = weyl_reflect(i, out, r)
    return out


def fundamental_weight(d: int, r: int) -> Weight:
    return tuple(1 if t == d - 1 else 0 for t in range(r))


# -- Minor specifications ---------------------------------------------------


@dataclass(frozen=True)
class MinorSpec:
    """A validated word of the fixed family plus a minor position.

    ``k`` in [1, n] points into the word; ``k`` in [-1, -r] denotes the
    principal minor for the letter |k| (the empty prefix acts).  Derived
    fields: number of cycles ``m``, the cycle ``m_prime`` containing k
    (0 for negative k), the letters ``i_k`` and ``i_n``, and ``d = |i_k|``.
    """

    r: int
    n: int
    k: int
    m: int
    m_prime: int
    i_k: int
    i_n: int
    d: int

    @property
    def word(self) -> tuple[int, ...]:
        return tuple((p - 1) % self.r + 1 for p in range(1, self.n + 1))

    def letter(self, pos: int) -> int:
        if not 1 <= pos <= self.n:
            raise BadShape(f"position {pos} outside [1, {self.n}]")
        return (pos - 1) % self.r + 1

    def cycle_of(self, pos: int) -> int:
        return ceil(pos / self.r)


def make_minor_spec(r: int, n: int, k: int) -> MinorSpec:
    if r < 2:
        raise BadShape("rank must be >= 2")
    if not 1 <= n <= r * r:
        raise BadShape(f"word length {n} outside [1, {r * r}]")
    if k == 0 or k < -r or k > n:
        raise BadShape(f"position {k} outside [-1,-{r}] u [1,{n}]")
    m = ceil(n / r)
    i_n = (n - 1) % r + 1
    if k > 0:
        i_k = (k - 1) % r + 1
        m_prime = ceil(k / r)
    else:
        i_k = abs(k)
        m_prime = 0
    return MinorSpec(r=r, n=n, k=k, m=m, m_prime=m_prime, i_k=i_k, i_n=i_n, d=abs(i_k))


def validate_word(word: tuple[int, ...], r: int) -> None:
    """Reject words outside the fixed family with a clear message."""
    expect = tuple((p - 1) % r + 1 for p in range(1, len(word) + 1))
    if tuple(word) != expect:
        raise BadShape(
            f"word {word} is not a prefix of (1..{r}) repeated; "
            f"expected {expect}"
        )


def aligned(spec: MinorSpec) -> MinorSpec:
    """Drop trailing letters different from i_k so that i_n == i_k.

    The minor is unchanged by this truncation; the path and closed-form
    generators require it.  Negative-k specs are returned unchanged.
    """
    if spec.k < 0 or spec.i_k == spec.i_n:
        return spec
    n_star = spec.n - ((spec.n - spec.k) % spec.r)
    return make_minor_spec(spec.r, n_star, spec.k)


def u_leq_weight(spec: MinorSpec) -> Weight:
    """Image of the d-th fundamental weight under the length-k prefix.

    For negative k the prefix is empty, so this is the fundamental
    weight itself; that extension feeds the frozen cluster directions.
    """
    lam = fundamental_weight(spec.d, spec.r)
    if spec.k < 0:
        return lam
    word = spec.word[: spec.k]
    return weyl_apply(word, lam, spec.r)
