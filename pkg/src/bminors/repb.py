"""Type-B representation engine.

The vector representation lives on basis v_1 < ... < v_r < v_0 <
v_{r-bar} < ... < v_{1-bar} (indices encoded as in :mod:`rootdata`);
its wedge powers carry the fundamental representations for d < r, and
the 2^r sign vectors carry the spin representation for d = r.  Minors
are evaluated by coefficient extraction against a pre-resolved target,
which is where every other pipeline in this package gets its oracle
values from.

Everything here is pure: operators and vectors are built fresh and
never mutated after construction, so sweeps may fan out per spec.

Coefficients are generic: symbolic computations pass LaurentPoly values
for the one-parameter arguments, numeric ones pass Fractions, and the
same tables serve both.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .laurent import LaurentPoly, poly_prod, tvar, yvar
from .rootdata import (
    MinorSpec,
    Weight,
    all_jindices,
    jrank,
    u_leq_weight,
)


class DegreeMismatch(ValueError):
    """Bilinear pairing of wedge vectors of different degrees."""


# -- basis data -------------------------------------------------------------


def basis_order(r: int) -> tuple[int, ...]:
    return all_jindices(r)


def basis_weight(v: int, r: int) -> Weight:
    """Weight of a vector-representation basis element, in the Lambda basis."""
    def e(i):
        return tuple(1 if t == i - 1 else 0 for t in range(r))

    zero = tuple(0 for _ in range(r))
    if v == 0:
        return zero
    j = abs(v)
    if j == r:
        wt = tuple(2 * e(r)[t] - e(r - 1)[t] for t in range(r))
    else:
        prev = e(j - 1) if j > 1 else zero
        wt = tuple(e(j)[t] - prev[t] for t in range(r))
    if v < 0:
        wt = tuple(-x for x in wt)
    return wt


# -- linear operators -------------------------------------------------------


def _const_like(x, sample):
    """Coerce the integer/fraction x into the ring of ``sample``."""
    if isinstance(sample, LaurentPoly):
        return LaurentPoly.const(x)
    return Fraction(x)


class LinOp:
    """Sparse column-major operator on the vector representation.

    ``cols[j]`` maps row index i to the coefficient of v_i in op(v_j);
    missing entries are zero.  Ring-agnostic: entries may be Fractions
    or LaurentPoly values, as built.
    """

    __slots__ = ("r", "cols")

    def __init__(self, r: int, cols: dict[int, dict[int, object]]):
        self.r = r
        self.cols = {
            j: {i: c for i, c in col.items() if not _is_zero(c)}
            for j, col in cols.items()
        }

    @staticmethod
    def identity(r: int, one) -> "LinOp":
        return LinOp(r, {j: {j: one} for j in basis_order(r)})

    def image(self, j: int):
        return self.cols.get(j, {})

    def compose(self, other: "LinOp") -> "LinOp":
        """self after other (matrix product self . other)."""
        cols: dict[int, dict[int, object]] = {}
        for j, col in other.cols.items():
            acc: dict[int, object] = {}
            for k, c in col.items():
                for i, a in self.image(k).items():
                    prev = acc.get(i)
                    acc[i] = a * c if prev is None else prev + a * c
            cols[j] = acc
        return LinOp(self.r, cols)

    def entries(self) -> dict[tuple[int, int], object]:
        return {(i, j): c for j, col in self.cols.items() for i, c in col.items()}

    def __eq__(self, other):
        if not isinstance(other, LinOp) or self.r != other.r:
            return NotImplemented
        a, b = self.entries(), other.entries()
        keys = set(a) | set(b)
        for key in keys:
            x = a.get(key)
            y = b.get(key)
            if x is None:
                x = _const_like(0, y)
            if y is None:
                y = _const_like(0, x)
            if x != y:
                return False
        return True


def _is_zero(c) -> bool:
    if isinstance(c, LaurentPoly):
        return c.is_zero()
    return c == 0


def op_f(i: int, r: int, one) -> LinOp:
    """Lowering generator on the vector representation."""
    cols: dict[int, dict[int, object]] = {}
    two = _const_like(2, one)
    if i < r:
        cols[i] = {i + 1: one}
        cols[-(i + 1)] = {-i: one}
    else:
        cols[r] = {0: one}
        cols[0] = {-r: two}
    return LinOp(r, cols)


def op_e(i: int, r: int, one) -> LinOp:
    """Raising generator on the vector representation."""
    cols: dict[int, dict[int, object]] = {}
    two = _const_like(2, one)
    if i < r:
        cols[i + 1] = {i: one}
        cols[-i] = {-(i + 1): one}
    else:
        cols[-r] = {0: one}
        cols[0] = {r: two}
    return LinOp(r, cols)


def _exp_nilpotent(gen: LinOp, t, r: int) -> LinOp:
    """exp(t * gen); the generators here are nilpotent of order <= 3."""
    one = _const_like(1, t)
    half = _const_like(Fraction(1, 2), t)
    out = LinOp.identity(r, one)
    g1 = gen
    g2 = gen.compose(gen)
    cols: dict[int, dict[int, object]] = {}
    for j in basis_order(r):
        acc: dict[int, object] = dict(out.image(j))
        for i, c in g1.image(j).items():
            acc[i] = acc.get(i, _const_like(0, t)) + t * c
        for i, c in g2.image(j).items():
            acc[i] = acc.get(i, _const_like(0, t)) + t * t * half * c
        cols[j] = acc
    return LinOp(r, cols)


def op_y(i: int, t, r: int) -> LinOp:
    return _exp_nilpotent(op_f(i, r, _const_like(1, t)), t, r)


def op_x(i: int, t, r: int) -> LinOp:
    return _exp_nilpotent(op_e(i, r, _const_like(1, t)), t, r)


def op_alpha_covee(i: int, t, r: int) -> LinOp:
    """Coweight one-parameter element t^{h_i}, diagonal on the basis."""
    cols = {}
    for j in basis_order(r):
        cols[j] = {j: t ** basis_weight(j, r)[i - 1]}
    return LinOp(r, cols)


def op_torus(coords, r: int) -> LinOp:
    """Diagonal element with coweight coordinates (t_1, ..., t_r)."""
    cols = {}
    for j in basis_order(r):
        wt = basis_weight(j, r)
        val = _const_like(1, coords[0])
        for idx in range(r):
            val = val * (coords[idx] ** wt[idx])
        cols[j] = {j: val}
    return LinOp(r, cols)


def x_minus_exp_oracle(i: int, c, r: int) -> LinOp:
    """Truncated-exponential construction y_i(c) . alpha_i-covee(1/c)."""
    return op_y(i, c, r).compose(op_alpha_covee(i, c ** -1, r))


def x_minus_vector(i: int, c, r: int) -> LinOp:
    """Closed-form action table for the negative one-parameter element."""
    one = _const_like(1, c)
    two = _const_like(2, c)
    cols = {j: {j: one} for j in basis_order(r)}
    if i < r:
        cols[i] = {i: c ** -1, i + 1: one}
        cols[i + 1] = {i + 1: c}
        cols[-(i + 1)] = {-(i + 1): c ** -1, -i: one}
        cols[-i] = {-i: c}
    else:
        cols[r] = {r: c ** -2, 0: c ** -1, -r: one}
        cols[0] = {0: one, -r: two * c}
        cols[-r] = {-r: c ** 2}
    return LinOp(r, cols)


def sbar_op(i: int, r: int) -> LinOp:
    """Representative of the simple reflection: x_i(-1) y_i(1) x_i(-1)."""
    one = Fraction(1)
    a = op_x(i, -one, r)
    b = op_y(i, one, r)
    return a.compose(b).compose(a)


def cycle_operator(s: int, r: int, upto: int | None = None) -> LinOp:
    """Product of the negative elements for one full (or truncated) cycle,
    with grid variables ``Y[s,.]``; the highest letter acts first."""
    top = r if upto is None else upto
    out = LinOp.identity(r, LaurentPoly.one())
    for i in range(1, top + 1):
        out = out.compose(x_minus_vector(i, yvar(s, i, r), r))
    return out


# -- wedge vectors ----------------------------------------------------------


def sort_tuple(tup: tuple[int, ...], r: int):
    """Sort a basis tuple into increasing order; returns (sign, tuple) or
    None when an index repeats."""
    ranks = [jrank(v, r) for v in tup]
    if len(set(ranks)) != len(ranks):
        return None
    order = sorted(range(len(tup)), key=lambda t: ranks[t])
    sign = 1
    perm = list(order)
    # count inversions of the permutation taking tup to sorted order
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                sign = -sign
    return sign, tuple(tup[t] for t in order)


@dataclass
class WedgeVector:
    """Linear combination of increasing d-tuples of basis indices."""

    d: int
    terms: dict[tuple[int, ...], object]

    @staticmethod
    def basis(tup: tuple[int, ...], coeff) -> "WedgeVector":
        return WedgeVector(len(tup), {tuple(tup): coeff})

    def coeff(self, tup: tuple[int, ...]):
        return self.terms.get(tuple(tup), LaurentPoly.zero())


def wedge_apply(op: LinOp, w: WedgeVector, r: int) -> WedgeVector:
    out: dict[tuple[int, ...], object] = {}
    for tup, coeff in w.terms.items():
        images = [list(op.image(v).items()) for v in tup]
        for choice in iproduct(*images):
            raw = tuple(i for i, _ in choice)
            sorted_ = sort_tuple(raw, r)
            if sorted_ is None:
                continue
            sign, key = sorted_
            val = coeff
            for _, c in choice:
                val = val * c
            if sign < 0:
                val = -val
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    return WedgeVector(w.d, {k: v for k, v in out.items() if not _is_zero(v)})


def bilinear_pair(u: WedgeVector, w: WedgeVector):
    """Contravariant form: diagonal with weight 2 on v_0, 1 elsewhere,
    extended to wedges as the determinant pairing."""
    if u.d != w.d:
        raise DegreeMismatch(f"degrees {u.d} and {w.d}")
    total = None
    for tup, cu in u.terms.items():
        cw = w.terms.get(tup)
        if cw is None:
            continue
        val = cu * cw
        for v in tup:
            if v == 0:
                val = 2 * val
        total = val if total is None else total + val
    if total is None:
        return LaurentPoly.zero()
    return total


def u_target(spec: MinorSpec) -> WedgeVector:
    """Image of the initial wedge under the length-k prefix, pre-resolved
    to a single increasing tuple with coefficient +1."""
    d, r, mp = spec.d, spec.r, spec.m_prime
    if spec.k < 0:
        tup = tuple(range(1, d + 1))
    elif mp + d <= r:
        tup = tuple(range(mp + 1, mp + d + 1))
    else:
        bars = tuple(range(-(d - r + mp), 0))  # (-(d-r+mp), ..., -1)
        tup = tuple(range(mp + 1, r + 1)) + bars
    return WedgeVector.basis(tup, LaurentPoly.one())


def minor_L_vector(spec: MinorSpec) -> LaurentPoly:
    """Coefficient of the target tuple in the word operator applied to
    v_1 ^ ... ^ v_d; requires d < r (or a negative position)."""
    if spec.d >= spec.r:
        raise ValueError("vector route needs d < r; use the spin route")
    w = WedgeVector.basis(tuple(range(1, spec.d + 1)), LaurentPoly.one())
    for pos in range(spec.n, 0, -1):
        i = spec.letter(pos)
        op = x_minus_vector(i, yvar(spec.cycle_of(pos), i, spec.r), spec.r)
        w = wedge_apply(op, w, spec.r)
    return w.coeff(next(iter(u_target(spec).terms)))


# -- spin representation ----------------------------------------------------

SpinBasis = tuple[int, ...]  # entries +1 / -1


def spin_h_eigen(eps: SpinBasis, i: int, r: int) -> int:
    if i < r:
        return (eps[i - 1] - eps[i]) // 2
    return eps[r - 1]


def spin_f(eps: SpinBasis, i: int, r: int) -> SpinBasis | None:
    if i < r:
        if eps[i - 1] == 1 and eps[i] == -1:
            out = list(eps)
            out[i - 1], out[i] = -1, 1
            return tuple(out)
        return None
    if eps[r - 1] == 1:
        return eps[: r - 1] + (-1,)
    return None


def spin_e(eps: SpinBasis, i: int, r: int) -> SpinBasis | None:
    if i < r:
        if eps[i - 1] == -1 and eps[i] == 1:
            out = list(eps)
            out[i - 1], out[i] = 1, -1
            return tuple(out)
        return None
    if eps[r - 1] == -1:
        return eps[: r - 1] + (1,)
    return None


@dataclass
class SpinVector:
    terms: dict[SpinBasis, object]


def spin_x_minus(i: int, c, r: int, w: SpinVector) -> SpinVector:
    """Apply (1 + c f_i) . c^{-h_i} on sign vectors; f_i squares to zero."""
    out: dict[SpinBasis, object] = {}

    def add(key, val):
        prev = out.get(key)
        out[key] = val if prev is None else prev + val

    for eps, coeff in w.terms.items():
        scaled = coeff * c ** (-spin_h_eigen(eps, i, r))
        add(eps, scaled)
        img = spin_f(eps, i, r)
        if img is not None:
            add(img, scaled * c)
    return SpinVector({k: v for k, v in out.items() if not _is_zero(v)})


def spin_weight(eps: SpinBasis, r: int) -> Weight:
    return tuple(spin_h_eigen(eps, i, r) for i in range(1, r + 1))


def minor_L_spin(spec: MinorSpec) -> LaurentPoly:
    """Coefficient of the m'-minus sign vector in the word operator applied
    to the highest vector (+,...,+); requires d = r."""
    if spec.d != spec.r:
        raise ValueError("spin route needs d = r")
    r = spec.r
    w = SpinVector({tuple(1 for _ in range(r)): LaurentPoly.one()})
    for pos in range(spec.n, 0, -1):
        i = spec.letter(pos)
        w = spin_x_minus(i, yvar(spec.cycle_of(pos), i, r), r, w)
    target = tuple(-1 if t < spec.m_prime else 1 for t in range(r))
    return w.terms.get(target, LaurentPoly.zero())


# -- combined minors --------------------------------------------------------


def minor_L(spec: MinorSpec) -> LaurentPoly:
    if spec.d == spec.r:
        return minor_L_spin(spec)
    return minor_L_vector(spec)


def torus_monomial(lam: Weight) -> LaurentPoly:
    return poly_prod(tvar(j + 1) ** lam[j] for j in range(len(lam)))


def minor_G(spec: MinorSpec) -> LaurentPoly:
    """Group-cell minor: the reduced-cell minor scaled by the torus monomial
    of the prefix-image weight."""
    return torus_monomial(u_leq_weight(spec)) * minor_L(spec)


def minor_L_appended(spec: MinorSpec, extra_letter: int) -> LaurentPoly:
    """Minor over the word extended by one letter carrying a fresh variable.

    The fresh variable uses a cycle index past the word, so it collides
    with nothing; the result should equal the plain minor whenever the
    appended letter differs from i_k.
    """
    r = spec.r
    fresh = yvar(spec.m + 2, extra_letter, r)
    if spec.d == spec.r:
        w = SpinVector({tuple(1 for _ in range(r)): LaurentPoly.one()})
        w = spin_x_minus(extra_letter, fresh, r, w)
        for pos in range(spec.n, 0, -1):
            i = spec.letter(pos)
            w = spin_x_minus(i, yvar(spec.cycle_of(pos), i, r), r, w)
        target = tuple(-1 if t < spec.m_prime else 1 for t in range(r))
        return w.terms.get(target, LaurentPoly.zero())
    w = WedgeVector.basis(tuple(range(1, spec.d + 1)), LaurentPoly.one())
    w = wedge_apply(x_minus_vector(extra_letter, fresh, r), w, r)
    for pos in range(spec.n, 0, -1):
        i = spec.letter(pos)
        w = wedge_apply(x_minus_vector(i, yvar(spec.cycle_of(pos), i, r), r), w, r)
    return w.coeff(next(iter(u_target(spec).terms)))
