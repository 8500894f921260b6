"""Finite abelian groups given by element lists and full operation tables.

Groups here are always small enough to enumerate, so everything (axioms,
homomorphism property, exactness) is decided by looking at every element.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np
from sympy import factorint


class NotAGroup(ValueError):
    def __init__(self, axiom: str, witness: tuple):
        super().__init__(f"not an abelian group: {axiom} fails at {witness!r}")
        self.axiom = axiom
        self.witness = witness


class NotAHom(ValueError):
    def __init__(self, witness: tuple):
        super().__init__(f"not a homomorphism at {witness!r}")
        self.witness = witness


def _generated_closure(table: np.ndarray, gens: list[int], start: set[int]) -> set[int]:
    closed = set(start)
    frontier = [g for g in gens if g not in closed]
    closed.update(frontier)
    while frontier:
        new = []
        members = list(closed)
        for a in frontier:
            for b in members:
                for c in (int(table[a, b]), int(table[b, a])):
                    if c not in closed:
                        closed.add(c)
                        new.append(c)
        frontier = new
    return closed


def generating_set(table: np.ndarray) -> list[int]:
    """Greedy generators of the magma given by ``table`` (least indices first)."""
    gens: list[int] = []
    closed: set[int] = set()
    for a in range(table.shape[0]):
        if a not in closed:
            gens.append(a)
            closed = _generated_closure(table, gens, closed)
    return gens


def associativity_witness(table: np.ndarray) -> tuple | None:
    """Light's test: associativity on (x, g, y) for generators g implies it everywhere."""
    for g in generating_set(table):
        lhs = table[table[:, g][:, None], np.arange(table.shape[0])[None, :]]
        rhs = table[:, table[g, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = bad[0]
            return (int(x), g, int(y))
    return None


class FinAbGroup:
    """A finite abelian group on arbitrary hashable elements.

    Use :func:`group_from_closure` to build one; the constructor expects an
    already-indexed table.
    """

    def __init__(self, elements: Sequence[Hashable], table: np.ndarray, identity: int,
                 labels: Sequence[str] | None = None, name: str = ""):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.table = table
        self._table = tuple(tuple(int(v) for v in row) for row in table)
        self._id = identity
        self.identity = self.elements[identity]
        self.labels = tuple(labels) if labels is not None else tuple(str(e) for e in self.elements)
        self.name = name
        self._inv = tuple(row.index(identity) for row in self._table)
        self._gens: list[int] | None = None

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, e):
        return e in self.index

    def __repr__(self):
        return f"FinAbGroup({self.name or '?'}, order={len(self)}, factors={invariant_factors(self)})"

    def op(self, a, b):
        return self.elements[self._table[self.index[a]][self.index[b]]]

    def inv(self, a):
        return self.elements[self._inv[self.index[a]]]

    def power(self, a, k: int):
        i, acc = self.index[a], self._id
        for _ in range(k):
            acc = self._table[acc][i]
        return self.elements[acc]

    def order_of(self, a) -> int:
        i, acc, k = self.index[a], self.index[a], 1
        while acc != self._id:
            acc = self._table[acc][i]
            k += 1
        return k

    def label(self, a) -> str:
        return self.labels[self.index[a]]

    @property
    def generators(self) -> list:
        if self._gens is None:
            self._gens = generating_set(self.table)
        return [self.elements[g] for g in self._gens]

    def is_trivial(self) -> bool:
        return len(self.elements) == 1


def group_from_closure(elements: Iterable[Hashable], op: Callable, identity: Hashable,
                       labels: Callable | Sequence[str] | None = None, name: str = "") -> FinAbGroup:
    """Tabulate ``op`` on ``elements`` and check every abelian group axiom."""
    elements = list(dict.fromkeys(elements))
    index = {e: i for i, e in enumerate(elements)}
    if identity not in index:
        raise NotAGroup("identity membership", (identity,))
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            c = op(a, b)
            k = index.get(c)
            if k is None:
                raise NotAGroup("closure", (a, b, c))
            table[i, j] = k
    e = index[identity]
    bad = np.argwhere(table[e] != np.arange(n))
    if len(bad):
        raise NotAGroup("identity", (elements[int(bad[0][0])],))
    bad = np.argwhere(table != table.T)
    if len(bad):
        raise NotAGroup("commutativity", (elements[int(bad[0][0])], elements[int(bad[0][1])]))
    has_inv = (table == e).any(axis=1)
    if not has_inv.all():
        raise NotAGroup("inverse", (elements[int(np.argmin(has_inv))],))
    w = associativity_witness(table)
    if w is not None:
        raise NotAGroup("associativity", tuple(elements[i] for i in w))
    if callable(labels):
        labels = [labels(x) for x in elements]
    return FinAbGroup(elements, table, e, labels, name)


def trivial_group(element: Hashable = 0, name: str = "0") -> FinAbGroup:
    return FinAbGroup([element], np.zeros((1, 1), dtype=np.int64), 0, None, name)


def subgroup(G: FinAbGroup, members: Iterable[Hashable], name: str = "") -> FinAbGroup:
    members = sorted(set(members), key=G.index.__getitem__)
    return group_from_closure(members, G.op, G.identity,
                              labels=[G.label(m) for m in members], name=name)


def quotient(G: FinAbGroup, H: Iterable[Hashable], name: str = "") -> tuple[FinAbGroup, "GroupHom"]:
    """``G/H`` on least-index coset representatives, with the projection."""
    H = list(H)
    rep = {}
    for a in G.elements:
        if a in rep:
            continue
        for h in H:
            rep[G.op(a, h)] = a
    reps = sorted(set(rep.values()), key=G.index.__getitem__)
    Q = group_from_closure(reps, lambda a, b: rep[G.op(a, b)], rep[G.identity],
                           labels=[G.label(r) for r in reps], name=name)
    return Q, GroupHom(G, Q, {a: rep[a] for a in G.elements})


@dataclass
class GroupHom:
    """A homomorphism, validated exhaustively on construction.

    ``mapping`` may be a dict or a callable; it is tabulated either way.
    """
    source: FinAbGroup
    target: FinAbGroup
    mapping: dict | Callable
    name: str = ""
    _map: dict = field(init=False, repr=False)

    def __post_init__(self):
        f = self.mapping
        get = f.__getitem__ if isinstance(f, dict) else f
        self._map = {a: get(a) for a in self.source.elements}
        for a, fa in self._map.items():
            if fa not in self.target.index:
                raise NotAHom((a, fa, "outside target"))
        G, H, m = self.source, self.target, self._map
        if m[G.identity] != H.identity:
            raise NotAHom((G.identity,))
        # the set of a with f(ab) = f(a)f(b) for all b is closed under the operation
        for a in G.generators:
            for b in G.elements:
                if m[G.op(a, b)] != H.op(m[a], m[b]):
                    raise NotAHom((a, b))

    def __call__(self, a):
        return self._map[a]

    def kernel(self) -> FinAbGroup:
        H = self.target
        return subgroup(self.source, [a for a, fa in self._map.items() if fa == H.identity],
                        name=f"ker {self.name}".strip())

    def image(self) -> FinAbGroup:
        return subgroup(self.target, set(self._map.values()), name=f"im {self.name}".strip())

    def cokernel(self) -> tuple[FinAbGroup, "GroupHom"]:
        return quotient(self.target, set(self._map.values()), name=f"coker {self.name}".strip())

    def is_injective(self) -> bool:
        return len(set(self._map.values())) == len(self.source)

    def is_surjective(self) -> bool:
        return len(set(self._map.values())) == len(self.target)

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()

    def then(self, other: "GroupHom") -> "GroupHom":
        return GroupHom(self.source, other.target, lambda a: other(self(a)),
                        name=f"{other.name}.{self.name}")


def hom_make(f, G: FinAbGroup, H: FinAbGroup, name: str = "") -> GroupHom:
    return GroupHom(G, H, f, name)


def identity_hom(G: FinAbGroup) -> GroupHom:
    return GroupHom(G, G, {a: a for a in G.elements}, "id")


def zero_hom(G: FinAbGroup, H: FinAbGroup) -> GroupHom:
    return GroupHom(G, H, lambda a: H.identity, "0")


def invariant_factors(G: FinAbGroup) -> list[int]:
    """Invariant factors ``d1 | d2 | ...`` read off from the sizes of the ``k``-torsion subgroups."""
    n = len(G)
    if n == 1:
        return []
    per_prime = []
    for p, e in factorint(n).items():
        ranks = [0]
        for k in range(1, e + 1):
            count = sum(1 for a in G.elements if G.power(a, p ** k) == G.identity)
            r = 0
            while count % p == 0 and count > 1:
                count //= p
                r += 1
            ranks.append(r)
        at_least = [ranks[k] - ranks[k - 1] for k in range(1, e + 1)]  # cyclic factors of order >= p^k
        exps = []
        for k in range(1, e + 1):
            nxt = at_least[k] if k < e else 0
            exps += [k] * (at_least[k - 1] - nxt)
        per_prime.append((p, sorted(exps, reverse=True)))
    length = max(len(exps) for _, exps in per_prime)
    factors = []
    for i in range(length):
        d = 1
        for p, exps in per_prime:
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    result = sorted(factors)
    assert np.prod(result, dtype=object) == n
    return result


def is_isomorphic(G: FinAbGroup, H: FinAbGroup) -> bool:
    return invariant_factors(G) == invariant_factors(H)


@dataclass
class ExactnessReport:
    ok: bool
    positions: list = field(default_factory=list)  # (name, ok, witness)

    def failures(self):
        return [p for p in self.positions if not p[1]]


def check_exact_sequence(homs: Sequence[GroupHom], positions: Iterable[int] | None = None,
                         leading_zero: bool = False, trailing_zero: bool = False) -> ExactnessReport:
    """Check ``im(homs[i-1]) == ker(homs[i])`` at each interior position ``i``.

    ``leading_zero`` adds injectivity of the first map, ``trailing_zero``
    surjectivity of the last.  A failing position records one witness element.
    """
    for f, g in zip(homs, homs[1:]):
        if f.target is not g.source:
            raise ValueError(f"maps {f.name!r} and {g.name!r} are not composable")
    if positions is None:
        positions = range(1, len(homs))
    out = []
    if leading_zero:
        f = homs[0]
        seen = {}
        wit = None
        for a in f.source.elements:
            if f(a) in seen:
                wit = (seen[f(a)], a)
                break
            seen[f(a)] = a
        out.append(("injective " + f.name, wit is None, wit))
    for i in positions:
        f, g = homs[i - 1], homs[i]
        im = set(f(a) for a in f.source.elements)
        ker = set(b for b in g.source.elements if g(b) == g.target.identity)
        wit = next(iter(sorted(im ^ ker, key=g.source.index.__getitem__)), None)
        out.append((f"exact at {g.source.name or i}", wit is None, wit))
    if trailing_zero:
        g = homs[-1]
        missing = [b for b in g.target.elements if b not in set(g(a) for a in g.source.elements)]
        out.append(("surjective " + g.name, not missing, missing[0] if missing else None))
    return ExactnessReport(all(ok for _, ok, _ in out), out)


def pullback(f: GroupHom, g: GroupHom, name: str = "Pb") -> tuple[FinAbGroup, GroupHom, GroupHom]:
    """``{(a, b) : f(a) = g(b)}`` with its two projections."""
    if f.target is not g.target:
        raise ValueError("pullback needs a common target")
    A, B = f.source, g.source
    pairs = [(a, b) for a in A.elements for b in B.elements if f(a) == g(b)]
    Pb = group_from_closure(pairs, lambda x, y: (A.op(x[0], y[0]), B.op(x[1], y[1])),
                            (A.identity, B.identity),
                            labels=lambda x: f"({A.label(x[0])},{B.label(x[1])})", name=name)
    return Pb, GroupHom(Pb, A, lambda x: x[0], "pr1"), GroupHom(Pb, B, lambda x: x[1], "pr2")
