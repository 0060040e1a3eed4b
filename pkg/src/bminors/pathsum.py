"""Labelled path graphs whose label sums reproduce the reduced-cell minors.

Two hard-coded graph families: increasing d-tuples over the full index
set J for d < r, and growing subsets of [1, r] (spin side) for d = r.
A path runs from level m down to level 0; the edge leaving level l
carries grid variables ``Y[l, .]``, in both families.

Enumeration is depth-first with memoized successor sets and is fully
deterministic (successors in lexicographic rank order), so the path
lists and the DOT export are byte-stable.  Sums fold over a generator
and never materialize the path list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Iterator

from .laurent import LaurentPoly, poly_prod, yvar
from .rootdata import MinorSpec, aligned, is_barred, jindex_text, jrank


class NotConnected(ValueError):
    """Edge label requested for a vertex pair that is not an edge."""


@dataclass(frozen=True)
class Path:
    """Vertex tuples from level m (index 0) down to level 0 (last index)."""

    tuples: tuple[tuple[int, ...], ...]

    @property
    def top_level(self) -> int:
        return len(self.tuples) - 1

    def levels(self) -> Iterator[tuple[int, tuple[int, ...]]]:
        m = self.top_level
        for idx, tup in enumerate(self.tuples):
            yield m - idx, tup


# -- vector-side graph ------------------------------------------------------


def _slot_candidates(v: int, r: int) -> tuple[int, ...]:
    if 1 <= v <= r - 1:
        return (v, v + 1)
    # from r, 0 or barred values anything weakly above is reachable
    rank = jrank(v, r)
    ordered = tuple(range(1, r + 1)) + (0,) + tuple(range(-r, 0))
    return tuple(u for u in ordered if jrank(u, r) >= rank)


@lru_cache(maxsize=None)
def vector_successors(tup: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    """All tuples connected below ``tup``, in lexicographic rank order."""
    d = len(tup)
    out = []
    for choice in iproduct(*(_slot_candidates(v, r) for v in tup)):
        ranks = [jrank(v, r) for v in choice]
        if any(ranks[t] >= ranks[t + 1] for t in range(d - 1)):
            continue
        ok = True
        for t in range(d - 1):
            lower = choice[t]
            upper_next = tup[t + 1]
            if is_barred(lower) or lower == 0:
                if jrank(lower, r) > jrank(upper_next, r):
                    ok = False
                    break
                if lower == upper_next and lower != 0:
                    ok = False
                    break
        if ok:
            out.append(choice)
    out.sort(key=lambda c: tuple(jrank(v, r) for v in c))
    return tuple(out)


def vector_connected(upper: tuple[int, ...], lower: tuple[int, ...], r: int) -> bool:
    return lower in vector_successors(upper, r)


def _can_reach(v: int, target: int, steps: int, r: int) -> bool:
    if jrank(v, r) > jrank(target, r):
        return False
    if v == target:
        return True
    if steps <= 0:
        return False
    if 1 <= target <= r:
        return target - v <= steps
    # barred target: jump once the slot sits at r, 0 or barred
    if 1 <= v <= r - 1:
        return (r - v) + 1 <= steps
    return True


def vector_target(spec: MinorSpec) -> tuple[int, ...]:
    d, r, mp = spec.d, spec.r, spec.m_prime
    if mp + d <= r:
        return tuple(range(mp + 1, mp + d + 1))
    return tuple(range(mp + 1, r + 1)) + tuple(range(-(d - r + mp), 0))


def iter_vector_paths(spec: MinorSpec) -> Iterator[Path]:
    spec = aligned(spec)
    if spec.k < 1 or spec.d >= spec.r:
        raise ValueError("vector paths need a positive position with d < r")
    r, m = spec.r, spec.m
    target = vector_target(spec)
    start = tuple(range(1, spec.d + 1))

    def walk(level: int, tup: tuple[int, ...], acc: list[tuple[int, ...]]):
        if level == 0:
            if tup == target:
                yield Path(tuple(acc))
            return
        for nxt in vector_successors(tup, r):
            if all(
                _can_reach(nxt[t], target[t], level - 1, r)
                for t in range(len(nxt))
            ):
                acc.append(nxt)
                yield from walk(level - 1, nxt, acc)
                acc.pop()

    yield from walk(m, start, [start])


def enumerate_vector_paths(spec: MinorSpec) -> list[Path]:
    return list(iter_vector_paths(spec))


def _q_factor(i: int, j: int, level: int, r: int) -> LaurentPoly:
    """Single-slot move factor for the edge leaving ``level``."""
    if 1 <= i <= r - 1:
        if j == i:
            return yvar(level, i - 1, r) / yvar(level, i, r)
        if j == i + 1:
            return LaurentPoly.one()
    elif i == r:
        if j == r:
            return yvar(level, r - 1, r) / (yvar(level, r, r) ** 2)
        if j == 0:
            return yvar(level, r, r) ** -1
        if is_barred(j):
            return yvar(level, abs(j) - 1, r) ** -1
    elif i == 0:
        if j == 0:
            return LaurentPoly.one()
        if is_barred(j):
            return 2 * yvar(level, r, r) / yvar(level, abs(j) - 1, r)
    elif i == -r:
        if is_barred(j):
            return yvar(level, r, r) ** 2 / yvar(level, abs(j) - 1, r)
    else:  # barred, |i| <= r-1
        if is_barred(j) and jrank(i, r) <= jrank(j, r):
            return yvar(level, abs(i), r) / yvar(level, abs(j) - 1, r)
    raise NotConnected(f"no move {jindex_text(i)} -> {jindex_text(j)}")


def vector_edge_label(
    level: int, upper: tuple[int, ...], lower: tuple[int, ...], r: int
) -> LaurentPoly:
    """Product of slot factors, halved when a zero shifts one slot left."""
    if not vector_connected(upper, lower, r):
        raise NotConnected(f"{upper} -> {lower}")
    out = poly_prod(
        _q_factor(upper[t], lower[t], level, r) for t in range(len(upper))
    )
    if any(
        lower[t] == 0 and upper[t + 1] == 0 for t in range(len(upper) - 1)
    ):
        out = Fraction(1, 2) * out
    return out


def path_label(path: Path, r: int) -> LaurentPoly:
    # Spin paths start from the empty tuple at the top; vector paths never do.
    edge_fn = spin_edge_label if path.tuples[0] == () else vector_edge_label
    m = path.top_level
    factors = []
    for idx in range(m):
        level = m - idx
        factors.append(edge_fn(level, path.tuples[idx], path.tuples[idx + 1], r))
    return poly_prod(factors)


def vector_path_sum(spec: MinorSpec) -> LaurentPoly:
    total = LaurentPoly.zero()
    for path in iter_vector_paths(spec):
        total = total + path_label(path, spec.r)
    return total


# -- spin-side graph --------------------------------------------------------


@lru_cache(maxsize=None)
def spin_successors(tup: tuple[int, ...], r: int) -> tuple[tuple[int, ...], ...]:
    """Connected lower tuples: interleaved same-size tuples, plus one-longer
    tuples when the top entry is below r."""
    t = len(tup)
    out = []
    ranges = []
    for idx in range(t):
        lo = tup[idx - 1] + 1 if idx else 1
        ranges.append(range(lo, tup[idx] + 1))
    for same in iproduct(*ranges):
        out.append(tuple(same))
    if t == 0 or tup[-1] < r:
        new_lo = tup[-1] + 1 if t else 1
        for same in iproduct(*ranges):
            for extra in range(new_lo, r + 1):
                out.append(tuple(same) + (extra,))
    out.sort()
    return tuple(out)


def spin_connected(upper: tuple[int, ...], lower: tuple[int, ...], r: int) -> bool:
    return lower in spin_successors(upper, r)


def iter_spin_paths(spec: MinorSpec) -> Iterator[Path]:
    spec = aligned(spec)
    if spec.k < 1 or spec.d != spec.r:
        raise ValueError("spin paths need a positive position with d = r")
    r, m, mp = spec.r, spec.m, spec.m_prime
    target = tuple(range(1, mp + 1))

    def walk(level: int, tup: tuple[int, ...], acc: list[tuple[int, ...]]):
        if level == 0:
            if tup == target:
                yield Path(tuple(acc))
            return
        for nxt in spin_successors(tup, r):
            if len(nxt) > mp or mp - len(nxt) > level - 1:
                continue
            acc.append(nxt)
            yield from walk(level - 1, nxt, acc)
            acc.pop()

    yield from walk(m, (), [()])


def enumerate_spin_paths(spec: MinorSpec) -> list[Path]:
    return list(iter_spin_paths(spec))


def spin_edge_label(
    level: int, upper: tuple[int, ...], lower: tuple[int, ...], r: int
) -> LaurentPoly:
    """Edge monomial on the spin side.

    The trailing 1/Y[level, r] factor is present only when no minus sign
    is created and the top entry sits strictly below r; a top entry at r
    picks up its balancing power inside the slot factor instead.
    """
    if not spin_connected(upper, lower, r):
        raise NotConnected(f"{upper} -> {lower}")
    t = len(upper)
    out = poly_prod(
        yvar(level, upper[idx], r) / yvar(level, lower[idx] - 1, r)
        for idx in range(t)
    )
    if len(lower) == t + 1:
        out = out / yvar(level, lower[t] - 1, r)
    elif t == 0 or upper[-1] < r:
        out = out / yvar(level, r, r)
    return out


def spin_path_sum(spec: MinorSpec) -> LaurentPoly:
    spec = aligned(spec)
    total = LaurentPoly.zero()
    for path in iter_spin_paths(spec):
        total = total + path_label(path, spec.r)
    return total


# -- DOT export -------------------------------------------------------------


def _vertex_name(level: int, tup: tuple[int, ...]) -> str:
    inner = ",".join(jindex_text(v) for v in tup)
    return f"({inner})@{level}"


def export_dot(paths: list[Path], r: int) -> str:
    """Deduplicated DOT digraph of the given paths with labelled edges."""
    if not paths:
        raise ValueError("empty path list")
    vertices: set[tuple[int, tuple[int, ...]]] = set()
    edges: dict[tuple[int, tuple[int, ...], tuple[int, ...]], LaurentPoly] = {}
    spin = paths[0].tuples[0] == ()
    for path in paths:
        m = path.top_level
        for idx, tup in enumerate(path.tuples):
            vertices.add((m - idx, tup))
        for idx in range(m):
            level = m - idx
            key = (level, path.tuples[idx], path.tuples[idx + 1])
            if key not in edges:
                if spin:
                    edges[key] = spin_edge_label(level, key[1], key[2], r)
                else:
                    edges[key] = vector_edge_label(level, key[1], key[2], r)
    lines = ["digraph paths {", "  rankdir=TB;"]
    for level, tup in sorted(vertices, key=lambda v: (-v[0], v[1])):
        lines.append(f'  "{_vertex_name(level, tup)}";')
    for (level, up, lo), label in sorted(
        edges.items(), key=lambda e: (-e[0][0], e[0][1], e[0][2])
    ):
        lines.append(
            f'  "{_vertex_name(level, up)}" -> "{_vertex_name(level - 1, lo)}"'
            f' [label="{label.text()}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
