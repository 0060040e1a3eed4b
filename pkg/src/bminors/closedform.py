"""Closed-form generation of the reduced-cell minors.

No paths and no representations are touched here: the minors come
straight out of monomial tables indexed by small constrained integer
grids.  The vector case (d < r) sums over stall-value grids with a
power-of-two coefficient; the spin case (d = r) sums over creation-time
vectors with column chains, every term with coefficient one.

Two variants of the power-of-two count are exposed: "theorem" reads the
left column at the row where the right column exits zero, "lemma" reads
it one row later.  The representation values single out the first
reading (it matches across the full sweep, so it is the default); the
acceptance suite records where the two readings disagree.
"""

from __future__ import annotations

from .laurent import LaurentPoly, poly_prod, yvar
from .rootdata import MinorSpec, aligned, all_jindices, jrank

R_PLUS_1 = "r+1"  # sentinel column for the plain 1/Y[l,r] monomial


def b_monomial(l: int, k, r: int) -> LaurentPoly:
    """Table of Laurent monomials attached to a cycle index and a J value
    (or the ``R_PLUS_1`` sentinel)."""
    if k == R_PLUS_1:
        return yvar(l, r, r) ** -1
    if 1 <= k <= r - 1:
        return yvar(l, k - 1, r) / yvar(l, k, r)
    if k == r:
        return yvar(l, r - 1, r) / yvar(l, r, r) ** 2
    if k == 0:
        return yvar(l, r, r) / yvar(l + 1, r, r)
    if k == -r:
        return yvar(l, r, r) ** 2 / yvar(l + 1, r - 1, r)
    if -r < k <= -1:
        return yvar(l, abs(k), r) / yvar(l + 1, abs(k) - 1, r)
    raise ValueError(f"bad monomial index {k}")


# -- vector case ------------------------------------------------------------

KSystem = tuple[tuple[int, ...], ...]  # rows indexed by s = 1..m-m'


def _terminal(spec: MinorSpec, i: int) -> int:
    """Where the i-th slot ends: inside [1, r] or at a barred value."""
    if i <= spec.r - spec.m_prime:
        return spec.m_prime + i
    return -(spec.d - i + 1)


def enumerate_k_systems(spec: MinorSpec) -> list[KSystem]:
    """All stall-value grids for the aligned spec, in lexicographic order.

    Rows are weakly above each other column-wise, strictly increasing
    along a row except for repeated zeros, with the strict diagonal
    condition between consecutive rows.
    """
    spec = aligned(spec)
    if spec.k < 1 or spec.d >= spec.r:
        raise ValueError("stall grids need a positive position with d < r")
    r, d = spec.r, spec.d
    mm = spec.m - spec.m_prime
    jvals = all_jindices(r)
    bounds = [
        jrank(_terminal(spec, i), r) if i <= r - spec.m_prime else 2 * r
        for i in range(1, d + 1)
    ]

    systems: list[KSystem] = []

    def fill(rows: list[list[int]], s: int, i: int):
        if s == mm:
            systems.append(tuple(tuple(row) for row in rows))
            return
        if i == d:
            fill(rows, s + 1, 0)
            return
        lo = jrank(i + 1, r)
        if s > 0:
            lo = max(lo, jrank(rows[s - 1][i], r))
        left = rows[s][i - 1] if i > 0 else None
        if left is not None:
            # strictly after the left neighbour, except zero may repeat
            lo = max(lo, jrank(left, r) if left == 0 else jrank(left, r) + 1)
        if s > 0 and i > 0:
            lo = max(lo, jrank(rows[s - 1][i - 1], r) + 1)
        hi = bounds[i]
        for v in jvals:
            rank = jrank(v, r)
            if lo <= rank <= hi:
                rows[s][i] = v
                fill(rows, s, i + 1)

    grid = [[0] * d for _ in range(mm)]
    if mm == 0:
        return [()]
    fill(grid, 0, 0)
    return systems


def _l_exponent(k: int, s: int, i: int, r: int) -> int:
    if 1 <= k <= r:
        return k + s - i - 1
    return s - i + r


def _two_exponent(sys: KSystem, spec: MinorSpec, variant: str) -> int:
    """Number of slots whose zero-exit is not inherited from the left.

    The boundary row past the grid is the terminal tuple, which is
    never zero.
    """
    d = spec.d
    mm = len(sys)

    def val(s: int, i: int) -> int:  # s in [1, mm+1], i in [1, d]
        if s <= mm:
            return sys[s - 1][i - 1]
        return _terminal(spec, i)

    count = 0
    for j in range(1, d):
        for t in range(1, mm + 1):
            if val(t, j + 1) != 0 or val(t + 1, j + 1) == 0:
                continue
            witness = val(t, j) if variant == "theorem" else val(t + 1, j)
            if witness != 0:
                count += 1
                break
    return count


def vector_system_term(
    sys: KSystem, spec: MinorSpec, c_variant: str = "theorem"
) -> LaurentPoly:
    spec = aligned(spec)
    if c_variant not in ("theorem", "lemma"):
        raise ValueError("c_variant must be 'theorem' or 'lemma'")
    m, r, d = spec.m, spec.r, spec.d
    mm = len(sys)
    factors = []
    for i in range(1, d + 1):
        for s in range(1, mm + 1):
            k = sys[s - 1][i - 1]
            factors.append(b_monomial(m - _l_exponent(k, s, i, r), k, r))
    return (2 ** _two_exponent(sys, spec, c_variant)) * poly_prod(factors)


def closed_minor_vector(spec: MinorSpec, c_variant: str = "theorem") -> LaurentPoly:
    spec = aligned(spec)
    total = LaurentPoly.zero()
    for sys in enumerate_k_systems(spec):
        total = total + vector_system_term(sys, spec, c_variant)
    return total


def system_to_path(sys: KSystem, spec: MinorSpec) -> tuple[tuple[int, ...], ...]:
    """Reconstruct the slot sequences of the path matching a stall grid.

    Returns level tuples from level m down to 0.  Used by the tests to
    certify the grid/path bijection term by term.
    """
    spec = aligned(spec)
    m, r, d = spec.m, spec.r, spec.d
    mm = len(sys)
    seqs = []
    for i in range(1, d + 1):
        col = [sys[s - 1][i - 1] for s in range(1, mm + 1)]
        delta = sum(1 for k in col if 1 <= k <= r)
        stalls = {_l_exponent(col[z], z + 1, i, r) for z in range(delta)}
        seq = [i]
        if delta < mm:
            first_bar_pos = _l_exponent(col[delta], delta + 1, i, r)
            for s in range(first_bar_pos - 1):
                seq.append(seq[-1] if s in stalls else seq[-1] + 1)
            for z in range(delta, mm):
                seq.append(col[z])
            last_pos = _l_exponent(col[mm - 1], mm, i, r)
            for _ in range(last_pos + 1, m + 1):
                seq.append(_terminal(spec, i))
        elif i > r - spec.m_prime:
            # all stalls sit below r; the slot climbs to r and then jumps
            # straight onto its barred terminal
            tailpos = mm + r - i + 1
            for s in range(tailpos - 1):
                seq.append(seq[-1] if s in stalls else seq[-1] + 1)
            for _ in range(tailpos, m + 1):
                seq.append(_terminal(spec, i))
        else:
            for s in range(m):
                seq.append(seq[-1] if s in stalls else seq[-1] + 1)
        seqs.append(seq)
    return tuple(
        tuple(seqs[i][s] for i in range(d)) for s in range(m + 1)
    )


# -- spin case ---------------------------------------------------------------

SpinSystem = tuple[tuple[int, ...], dict[tuple[int, int], int]]
# (creation levels t_1 > ... > t_m', grid mapping (column i, level s) -> value)


def enumerate_spin_systems(spec: MinorSpec) -> list[SpinSystem]:
    """All (creation-level, column-chain) systems for the aligned spec."""
    spec = aligned(spec)
    if spec.k < 1 or spec.d != spec.r:
        raise ValueError("spin systems need a positive position with d = r")
    m, mp, r = spec.m, spec.m_prime, spec.r
    systems: list[SpinSystem] = []

    from itertools import combinations

    for combo in combinations(range(1, m + 1), mp):
        tvec = tuple(sorted(combo, reverse=True))  # t_1 > ... > t_m'

        def grid_val(grid: dict, i: int, s: int) -> int | None:
            if s <= mp - i:
                return i  # stabilized zone
            return grid.get((i, s))

        def fill(i: int, grid: dict):
            if i == 0:
                systems.append((tvec, dict(grid)))
                return
            t_i = tvec[i - 1]
            lo_s = mp - i + 1
            hi_s = t_i - 1

            def chain(s: int, grid: dict):
                if s > hi_s:
                    fill(i - 1, grid)
                    return
                lo = grid_val(grid, i, s - 1)
                assert lo is not None
                hi = r
                # the right neighbour at the level below caps this value
                cap = grid_val(grid, i + 1, s - 1) if i < mp else None
                for v in range(max(lo, i), hi + 1):
                    if cap is not None and v >= cap:
                        continue
                    grid[(i, s)] = v
                    chain(s + 1, grid)
                    del grid[(i, s)]

            if lo_s > hi_s:
                fill(i - 1, grid)
            else:
                chain(lo_s, grid)

        fill(mp, {})

    def sort_key(sys: SpinSystem):
        tvec, grid = sys
        return (tvec, tuple(sorted(grid.items())))

    systems.sort(key=sort_key)
    return systems


def spin_system_term(sys: SpinSystem, spec: MinorSpec) -> LaurentPoly:
    spec = aligned(spec)
    m, mp, r = spec.m, spec.m_prime, spec.r
    tvec, grid = sys
    tfull = (m + 1,) + tvec + (0,)  # t_0, t_1, ..., t_m', t_{m'+1}

    def grid_val(i: int, s: int) -> int:
        if s <= mp - i:
            return i
        return grid[(i, s)]

    factors = []
    for i in range(1, mp + 2):
        t_i = tfull[i]
        if i <= mp:
            for s in range(t_i - 1, mp - i, -1):
                factors.append(b_monomial(s, -grid_val(i, s), r))
        for s in range(tfull[i - 1] - 1, t_i, -1):
            factors.append(b_monomial(s, R_PLUS_1, r))
    return poly_prod(factors)


def closed_minor_spin(spec: MinorSpec) -> LaurentPoly:
    spec = aligned(spec)
    total = LaurentPoly.zero()
    for sys in enumerate_spin_systems(spec):
        total = total + spin_system_term(sys, spec)
    return total


def closed_minor(spec: MinorSpec, c_variant: str = "theorem") -> LaurentPoly:
    if spec.d == spec.r:
        return closed_minor_spin(spec)
    return closed_minor_vector(spec, c_variant)
