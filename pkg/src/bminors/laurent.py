"""Exact multivariate Laurent polynomials over the rationals.

Values are linear combinations of Laurent monomials in grid variables
``Y[s,j]`` and torus variables ``T[j]``, with ``fractions.Fraction``
coefficients.  All operations are pure and produce canonical forms
(no zero coefficients, one term per exponent vector), so values can be
shared freely across threads.

The boundary convention ``Y[s,0] = Y[s,r+1] = 1`` is enforced in a
single place, the :func:`yvar` constructor.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple


class DivisionFailure(ArithmeticError):
    """No Laurent-polynomial quotient exists for the requested division."""


class UnboundVariable(KeyError):
    """A variable of the polynomial is missing from the evaluation point."""


class ZeroSubstitution(ValueError):
    """An evaluation point binds a variable to zero."""


class Variable(NamedTuple):
    """A single symbol: kind 'Y' with cycle ``s`` and column ``j``, or kind 'T'
    (torus coordinate) with ``s == 0`` and index ``j``."""

    kind: str
    s: int
    j: int

    def text(self) -> str:
        if self.kind == "T":
            return f"T[{self.j}]"
        return f"Y[{self.s},{self.j}]"

    def json_name(self) -> str:
        if self.kind == "T":
            return f"T_{self.j}"
        return f"Y_{self.s}_{self.j}"

    @staticmethod
    def from_json_name(name: str) -> "Variable":
        parts = name.split("_")
        if parts[0] == "T" and len(parts) == 2:
            return Variable("T", 0, int(parts[1]))
        if parts[0] == "Y" and len(parts) == 3:
            return Variable("Y", int(parts[1]), int(parts[2]))
        raise ValueError(f"bad variable name {name!r}")


# A monomial key is a sorted tuple of (Variable, nonzero exponent) pairs.
MonoKey = tuple[tuple[Variable, int], ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _mono_mul(a: MonoKey, b: MonoKey) -> MonoKey:
    exps: dict[Variable, int] = dict(a)
    for v, e in b:
        ne = exps.get(v, 0) + e
        if ne:
            exps[v] = ne
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_degree(key: MonoKey) -> int:
    return sum(e for _, e in key)


def _dense(key: MonoKey, varlist: list[Variable]) -> tuple[int, ...]:
    exps = dict(key)
    return tuple(exps.get(v, 0) for v in varlist)


def _term_order(key: MonoKey, varlist: list[Variable]):
    """Graded-lexicographic order: total degree first, then the exponent
    vector over ``varlist`` (variables sorted by (kind, s, j))."""
    return (_mono_degree(key), _dense(key, varlist))


class LaurentPoly:
    """Canonical Laurent polynomial: ``terms`` maps monomial key -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[MonoKey, Fraction] | None = None):
        clean: dict[MonoKey, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[key] = clean.get(key, _ZERO) + c
                    if not clean[key]:
                        del clean[key]
        self.terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def const(value) -> "LaurentPoly":
        c = Fraction(value)
        return LaurentPoly({(): c} if c else {})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly.const(1)

    @staticmethod
    def monomial(coeff, exps: Mapping[Variable, int]) -> "LaurentPoly":
        key = tuple(sorted((v, e) for v, e in exps.items() if e))
        return LaurentPoly({key: Fraction(coeff)})

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(): _ONE}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for key in self.terms:
            out.update(v for v, _ in key)
        return out

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for key, c in o.terms.items():
            nc = out.get(key, _ZERO) + c
            if nc:
                out[key] = nc
            elif key in out:
                del out[key]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = {k: -c for k, c in self.terms.items()}
        return res

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[MonoKey, Fraction] = {}
        for ka, ca in self.terms.items():
            for kb, cb in o.terms.items():
                key = _mono_mul(ka, kb)
                nc = out.get(key, _ZERO) + ca * cb
                if nc:
                    out[key] = nc
                elif key in out:
                    del out[key]
        res = LaurentPoly.__new__(LaurentPoly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return LaurentPoly.one()
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = LaurentPoly.one()
        for _ in range(n):
            out = out * base
        return out

    def inverse(self) -> "LaurentPoly":
        """Inverse of a (nonzero) monomial; general inverses do not exist."""
        if len(self.terms) != 1:
            raise DivisionFailure("only monomials are invertible")
        (key, coeff), = self.terms.items()
        inv_key = tuple(sorted((v, -e) for v, e in key))
        return LaurentPoly({inv_key: _ONE / coeff})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return exact_div(self, o)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation and rendering --------------------------------------

    def eval_at(self, point: Mapping[Variable, Fraction]) -> Fraction:
        for v, val in point.items():
            if Fraction(val) == 0:
                raise ZeroSubstitution(f"{v.text()} = 0")
        total = _ZERO
        for key, coeff in self.terms.items():
            val = coeff
            for v, e in key:
                if v not in point:
                    raise UnboundVariable(v.text())
                val *= Fraction(point[v]) ** e
            total += val
        return total

    def sorted_terms(self) -> list[tuple[MonoKey, Fraction]]:
        varlist = sorted(self.variables())
        return sorted(self.terms.items(), key=lambda kv: _term_order(kv[0], varlist))

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self.sorted_terms():
            factors = [str(coeff)]
            for v, e in key:
                factors.append(v.text() if e == 1 else f"{v.text()}^{e}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    __str__ = text

    def __repr__(self):
        return f"LaurentPoly({self.text()})"

    def json_dict(self) -> dict:
        terms = []
        for key, coeff in self.sorted_terms():
            terms.append(
                {
                    "coeff": str(coeff),
                    "exps": {v.json_name(): e for v, e in key},
                }
            )
        return {"terms": terms}

    @staticmethod
    def from_json_dict(data: Mapping) -> "LaurentPoly":
        out = LaurentPoly.zero()
        for term in data["terms"]:
            exps = {
                Variable.from_json_name(name): int(e)
                for name, e in term["exps"].items()
            }
            out = out + LaurentPoly.monomial(Fraction(term["coeff"]), exps)
        return out


def yvar(s: int, j: int, r: int) -> LaurentPoly:
    """Grid variable ``Y[s,j]`` with the boundary convention that columns
    0 and r+1 are the constant 1.  This is the one choke point for that
    convention; formula sites never special-case it."""
    if j == 0 or j == r + 1:
        return LaurentPoly.one()
    if not (1 <= j <= r):
        raise ValueError(f"column {j} outside [0, {r + 1}]")
    if s < 1:
        raise ValueError(f"cycle index {s} must be >= 1")
    return LaurentPoly.monomial(1, {Variable("Y", s, j): 1})


def tvar(j: int) -> LaurentPoly:
    """Torus coordinate ``T[j]``."""
    if j < 1:
        raise ValueError("torus index must be >= 1")
    return LaurentPoly.monomial(1, {Variable("T", 0, j): 1})


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.zero()
    for p in items:
        out = out + p
    return out


def poly_prod(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly.one()
    for p in items:
        out = out * p
    return out


def _floor_monomial(p: LaurentPoly) -> MonoKey:
    """Per-variable minimum exponent over the terms of ``p``."""
    mins: dict[Variable, int] = {}
    seen_keys = list(p.terms)
    allvars = {v for key in seen_keys for v, _ in key}
    for v in allvars:
        mins[v] = min(dict(key).get(v, 0) for key in seen_keys)
    return tuple(sorted((v, e) for v, e in mins.items() if e))


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Exact quotient ``s`` with ``s * q == p``.

    Monomial divisors always succeed.  For general divisors, both sides
    are shifted by their per-variable exponent floors and ordinary
    multivariate division runs under the graded term order; a nonzero
    remainder raises :class:`DivisionFailure`.
    """
    if q.is_zero():
        raise ValueError("division by zero polynomial")
    if p.is_zero():
        return LaurentPoly.zero()
    if q.is_monomial():
        (kq, cq), = q.terms.items()
        inv = tuple(sorted((v, -e) for v, e in kq))
        return LaurentPoly({_mono_mul(kp, inv): cp / cq for kp, cp in p.terms.items()})

    fp = _floor_monomial(p)
    fq = _floor_monomial(q)
    neg = lambda key: tuple(sorted((v, -e) for v, e in key))
    prem = {_mono_mul(k, neg(fp)): c for k, c in p.terms.items()}
    qterms = {_mono_mul(k, neg(fq)): c for k, c in q.terms.items()}

    varlist = sorted(p.variables() | q.variables())

    def leading(terms: dict[MonoKey, Fraction]) -> MonoKey:
        return max(terms, key=lambda k: _term_order(k, varlist))

    lead_q = leading(qterms)
    cq = qterms[lead_q]
    quot: dict[MonoKey, Fraction] = {}
    while prem:
        lead_p = leading(prem)
        dq = dict(lead_q)
        factor_exps = dict(lead_p)
        ok = True
        for v, e in dq.items():
            ne = factor_exps.get(v, 0) - e
            if ne < 0:
                ok = False
                break
            if ne:
                factor_exps[v] = ne
            else:
                factor_exps.pop(v, None)
        for v, e in list(factor_exps.items()):
            if e < 0:
                ok = False
        if not ok:
            raise DivisionFailure("nonzero remainder in multivariate division")
        fkey = tuple(sorted(factor_exps.items()))
        fcoeff = prem[lead_p] / cq
        quot[fkey] = quot.get(fkey, _ZERO) + fcoeff
        for kq2, cq2 in qterms.items():
            key = _mono_mul(fkey, kq2)
            nc = prem.get(key, _ZERO) - fcoeff * cq2
            if nc:
                prem[key] = nc
            elif key in prem:
                del prem[key]

    # p = P * fp and q = Q * fq, so p/q = (P/Q) * fp / fq
    shift = _mono_mul(fp, neg(fq))
    return LaurentPoly({_mono_mul(k, shift): c for k, c in quot.items()})
