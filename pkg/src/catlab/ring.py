"""Finite commutative rings with unit, stored as total operation tables.

Elements are the indices ``0..n-1``; every ring carries a printable label per
element and the expression that built it.  All constructions validate the ring
axioms exhaustively, so a ring that exists is a ring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np


class RingAxiomError(ValueError):
    """Raised when a table fails a commutative ring axiom (carries a witness)."""

    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"{axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class CapExceeded(ValueError):
    """A requested computation is larger than the configured size cap."""


class FiniteRing:
    """A finite commutative ring with unit.

    ``add_table`` and ``mul_table`` are ``n x n`` integer arrays; python-level
    lookups go through the tuple copies ``_add``/``_mul`` which are much faster
    than indexing numpy scalars.
    """

    def __init__(self, add, mul, zero: int, one: int, labels: Sequence[str], spec: str):
        self.add_table = np.asarray(add, dtype=np.int64)
        self.mul_table = np.asarray(mul, dtype=np.int64)
        n = self.add_table.shape[0]
        if self.add_table.shape != (n, n) or self.mul_table.shape != (n, n):
            raise ValueError("operation tables must be square")
        if len(labels) != n:
            raise ValueError("one label per element required")
        self.n = n
        self.zero = zero
        self.one = one
        self.labels = tuple(labels)
        self.spec = spec
        self._add = tuple(tuple(int(v) for v in row) for row in self.add_table)
        self._mul = tuple(tuple(int(v) for v in row) for row in self.mul_table)
        self._validate()
        self.neg_table = np.array([self._add[a].index(zero) for a in range(n)], dtype=np.int64)
        self._neg = tuple(int(v) for v in self.neg_table)
        inv = {}
        for a in range(n):
            row = self._mul[a]
            for b in range(n):
                if row[b] == one:
                    inv[a] = b
                    break
        self._inv = inv
        self.units = tuple(sorted(inv))
        self.unit_mask = np.zeros(n, dtype=bool)
        self.unit_mask[list(self.units)] = True
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}

    def _validate(self):
        n = self.n
        A, M = self.add_table, self.mul_table
        if not (((A >= 0) & (A < n)).all() and ((M >= 0) & (M < n)).all()):
            raise RingAxiomError("closure", ())
        for name, T in (("additive commutativity", A), ("multiplicative commutativity", M)):
            bad = np.argwhere(T != T.T)
            if len(bad):
                raise RingAxiomError(name, tuple(int(v) for v in bad[0]))
        idx = np.arange(n)
        if not (A[self.zero] == idx).all():
            raise RingAxiomError("additive identity", (int(np.argmax(A[self.zero] != idx)),))
        if not (M[self.one] == idx).all():
            raise RingAxiomError("multiplicative identity", (int(np.argmax(M[self.one] != idx)),))
        if not (A == self.zero).any(axis=1).all():
            raise RingAxiomError("additive inverse", (int(np.argmin((A == self.zero).any(axis=1))),))
        for name, T in (("additive associativity", A), ("multiplicative associativity", M)):
            lhs = T[T[:, :, None], idx[None, None, :]]
            rhs = T[idx[:, None, None], T[None, :, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                raise RingAxiomError(name, tuple(int(v) for v in bad[0]))
        lhs = M[idx[:, None, None], A[None, :, :]]
        rhs = A[M[:, :, None], M[:, None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            raise RingAxiomError("distributivity", tuple(int(v) for v in bad[0]))
        if n > 1 and self.zero == self.one:
            raise RingAxiomError("zero equals one in a nonzero ring", ())

    # arithmetic -----------------------------------------------------------

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteRing({self.spec!r}, n={self.n})"

    @property
    def elements(self) -> range:
        return range(self.n)

    @property
    def is_zero_ring(self) -> bool:
        return self.n == 1

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def is_unit(self, a: int) -> bool:
        return a in self._inv

    def inv(self, a: int) -> int:
        try:
            return self._inv[a]
        except KeyError:
            raise ZeroDivisionError(f"{self.labels[a]} is not a unit in {self.spec}") from None

    def pow(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = self._mul[result][a]
        return result

    def sum(self, *terms: int) -> int:
        acc = self.zero
        for t in terms:
            acc = self._add[acc][t]
        return acc

    def prod(self, *factors: int) -> int:
        acc = self.one
        for f in factors:
            acc = self._mul[acc][f]
        return acc

    def from_int(self, k: int) -> int:
        """Image of the integer ``k`` under the canonical map Z -> R."""
        acc = self.zero
        step = self.one if k >= 0 else self._neg[self.one]
        for _ in range(abs(k)):
            acc = self._add[acc][step]
        return acc

    def label(self, a: int) -> str:
        return self.labels[a]

    def element(self, label: str) -> int:
        return self._label_index[label]


@dataclass(frozen=True)
class RingHom:
    source: FiniteRing
    target: FiniteRing
    map: tuple

    def __post_init__(self):
        S, T, f = self.source, self.target, self.map
        if len(f) != S.n:
            raise ValueError("ring map must be total")
        if f[S.zero] != T.zero or f[S.one] != T.one:
            raise RingAxiomError("ring map must preserve 0 and 1", ())
        fa = np.asarray(f, dtype=np.int64)
        for name, ts, tt in (("addition", S.add_table, T.add_table),
                             ("multiplication", S.mul_table, T.mul_table)):
            bad = np.argwhere(fa[ts] != tt[fa[:, None], fa[None, :]])
            if len(bad):
                raise RingAxiomError(f"ring map does not preserve {name}", tuple(int(v) for v in bad[0]))

    def __call__(self, a: int) -> int:
        return self.map[a]

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.n


@dataclass(frozen=True)
class PrincipalQuotient:
    base: FiniteRing
    generator: int
    ideal: frozenset
    quotient: FiniteRing
    project: RingHom
    lift: tuple


class UnitAnalysis(NamedTuple):
    units: frozenset
    zero_divisors: frozenset
    radical: frozenset


# constructions -------------------------------------------------------------

def make_zmod(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("Z/n needs n >= 1")
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, [str(i) for i in range(n)], f"Z/{n}")


def _wrap(label: str) -> str:
    return label if label.lstrip("-").isdigit() else f"({label})"


def make_product(factors: Sequence[FiniteRing]) -> FiniteRing:
    """Componentwise product; element index is mixed-radix with the first factor most significant."""
    if not factors:
        raise ValueError("product of an empty list of rings")
    sizes = [R.n for R in factors]
    tuples = list(itertools.product(*[range(s) for s in sizes]))
    index = {t: i for i, t in enumerate(tuples)}
    n = len(tuples)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, s in enumerate(tuples):
        for j, t in enumerate(tuples):
            add[i, j] = index[tuple(R._add[x][y] for R, x, y in zip(factors, s, t))]
            mul[i, j] = index[tuple(R._mul[x][y] for R, x, y in zip(factors, s, t))]
    labels = ["(" + ",".join(R.labels[x] for R, x in zip(factors, t)) + ")" for t in tuples]
    zero = index[tuple(R.zero for R in factors)]
    one = index[tuple(R.one for R in factors)]
    spec = " x ".join(R.spec for R in factors)
    return FiniteRing(add, mul, zero, one, labels, spec)


def _poly_label(R: FiniteRing, coeffs: Sequence[int]) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == R.zero:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if i == 0:
            terms.append(R.labels[c])
        elif c == R.one:
            terms.append(mono)
        else:
            terms.append(_wrap(R.labels[c]) + mono)
    return "+".join(terms) if terms else R.labels[R.zero]


def make_poly_quotient(R: FiniteRing, f: Sequence[int], name: str | None = None) -> FiniteRing:
    """``R[x]/(f)`` for a monic ``f`` given by integer coefficients, lowest degree first.

    Coefficients are pushed into ``R`` through the canonical map Z -> R.  An element
    is the coefficient vector ``(c_0, ..., c_{d-1})`` with index ``sum c_i * |R|^i``.
    """
    coeffs = [R.from_int(int(c)) for c in f]
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("modulus must have degree >= 1")
    if coeffs[-1] != R.one:
        raise ValueError("modulus must be monic")
    n0 = R.n
    vecs = list(itertools.product(range(n0), repeat=d))
    vecs = [tuple(reversed(v)) for v in vecs]  # c_0 varies fastest
    index = {v: i for i, v in enumerate(vecs)}
    tail = [R.neg(c) for c in coeffs[:-1]]  # x^d = sum tail[i] x^i

    def reduce(prod):
        prod = list(prod)
        for k in range(len(prod) - 1, d - 1, -1):
            c = prod[k]
            if c == R.zero:
                continue
            prod[k] = R.zero
            for i in range(d):
                prod[k - d + i] = R.add(prod[k - d + i], R.mul(c, tail[i]))
        return tuple(prod[:d])

    n = len(vecs)
    add = np.empty((n, n), dtype=np.int64)
    mul = np.empty((n, n), dtype=np.int64)
    for i, s in enumerate(vecs):
        for j, t in enumerate(vecs):
            add[i, j] = index[tuple(R.add(x, y) for x, y in zip(s, t))]
            conv = [R.zero] * (2 * d - 1)
            for a, x in enumerate(s):
                if x == R.zero:
                    continue
                for b, y in enumerate(t):
                    conv[a + b] = R.add(conv[a + b], R.mul(x, y))
            mul[i, j] = index[reduce(conv)]
    labels = [_poly_label(R, v) for v in vecs]
    zero = index[(R.zero,) * d]
    one = index[(R.one,) + (R.zero,) * (d - 1)]
    if name is None:
        name = f"{R.spec}[x]/({_poly_label(R, coeffs)})"
    return FiniteRing(add, mul, zero, one, labels, name)


def quotient_by_principal(R: FiniteRing, p: int) -> PrincipalQuotient:
    """``R/pR`` on least-index coset representatives."""
    ideal = frozenset(R.mul(r, p) for r in R.elements)
    rep_of = {}
    for x in R.elements:
        if x in rep_of:
            continue
        for i in ideal:
            rep_of[R.add(x, i)] = x
    reps = sorted(set(rep_of.values()))
    qidx = {r: k for k, r in enumerate(reps)}
    m = len(reps)
    add = [[qidx[rep_of[R.add(a, b)]] for b in reps] for a in reps]
    mul = [[qidx[rep_of[R.mul(a, b)]] for b in reps] for a in reps]
    Q = FiniteRing(add, mul, qidx[rep_of[R.zero]], qidx[rep_of[R.one]],
                   [R.labels[r] for r in reps], f"({R.spec})/({R.labels[p]})")
    project = RingHom(R, Q, tuple(qidx[rep_of[x]] for x in R.elements))
    lift = tuple(reps)
    assert all(project(lift[k]) == k for k in range(m))
    assert m * len(ideal) == R.n
    return PrincipalQuotient(R, p, ideal, Q, project, lift)


def unit_analysis(R: FiniteRing) -> UnitAnalysis:
    units = frozenset(R.units)
    zd = frozenset(a for a in R.elements if a != R.zero
                   and any(R.mul(a, b) == R.zero for b in R.elements if b != R.zero))
    radical = frozenset(a for a in R.elements if R.pow(a, R.n) == R.zero)
    for a in R.elements:
        if a == R.zero or a in units:
            continue
        if a not in zd:
            raise AssertionError(f"{R.labels[a]} is neither a unit nor a zero divisor")
    if not radical <= zd | {R.zero}:
        raise AssertionError("nilpotent element outside zero divisors")
    return UnitAnalysis(units, zd, radical)


def is_local(R: FiniteRing) -> bool:
    """A nonzero finite ring is local iff its non-units are closed under addition."""
    if R.is_zero_ring:
        return False
    non_units = [a for a in R.elements if not R.is_unit(a)]
    return all(not R.is_unit(R.add(a, b)) for a in non_units for b in non_units)


def admissible_pairs(R: FiniteRing) -> list[tuple[int, int]]:
    """All ordered ``(p, q)`` with ``pq + 2 = 0``."""
    two = R.from_int(2)
    return [(p, q) for p in R.elements for q in R.elements
            if R.add(R.mul(p, q), two) == R.zero]
