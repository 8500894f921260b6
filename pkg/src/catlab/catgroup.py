"""Finite strict symmetric categorical groups and monoidal functors between them.

A :class:`CatGroup` is given by callables rather than tables: the morphism set of
the larger constructions runs to tens of thousands of arrows, so only the
per-object lists ``into(y)`` are materialised.  Morphisms are :class:`Mor`
triples, and two morphisms are equal exactly when source, target and payload
agree.

Composition is written ``compose(g, f)`` for "first ``f``, then ``g``".
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Hashable, NamedTuple

import numpy as np

from .abgroup import (ExactnessReport, FinAbGroup, GroupHom, associativity_witness,
                      check_exact_sequence, group_from_closure, invariant_factors, pullback)

#: default number of cases per law once exhaustive enumeration would exceed it
DEFAULT_BUDGET = 2000


class Mor(NamedTuple):
    src: Hashable
    tgt: Hashable
    data: Hashable


class CatGroup:
    def __init__(self, name: str, objects, unit, into: Callable, compose: Callable,
                 identity: Callable, inverse: Callable, tensor: Callable, tensor_mor: Callable,
                 obj_label: Callable | None = None):
        self.name = name
        self.objects = tuple(objects)
        self.obj_index = {x: i for i, x in enumerate(self.objects)}
        self.unit = unit
        self._into_fn = into
        self.compose = compose
        self.identity = identity
        self.inverse = inverse
        self.tensor = tensor
        self.tensor_mor = tensor_mor
        self.obj_label = obj_label or str
        self._into: dict = {}
        self._mors: list | None = None
        self._mor_set: set | None = None
        self._hom: dict | None = None
        self._components: dict | None = None
        self._pi0 = None
        self._pi1 = None

    def __repr__(self):
        return f"CatGroup({self.name}, objects={len(self.objects)})"

    def into(self, y) -> list:
        lst = self._into.get(y)
        if lst is None:
            lst = self._into[y] = list(self._into_fn(y))
        return lst

    def morphisms(self) -> list:
        if self._mors is None:
            self._mors = [f for y in self.objects for f in self.into(y)]
        return self._mors

    def is_morphism(self, f) -> bool:
        if self._mor_set is None:
            self._mor_set = set(self.morphisms())
        return f in self._mor_set

    def hom(self, x, y) -> list:
        if self._hom is None:
            hom: dict = {}
            for f in self.morphisms():
                hom.setdefault((f.src, f.tgt), []).append(f)
            self._hom = hom
        return self._hom.get((x, y), [])

    def components(self) -> dict:
        """Map each object to the least-index object of its connected component."""
        if self._components is None:
            parent = {x: x for x in self.objects}
            idx = self.obj_index

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for f in self.morphisms():
                a, b = find(f.src), find(f.tgt)
                if a != b:
                    if idx[a] < idx[b]:
                        parent[b] = a
                    else:
                        parent[a] = b
            self._components = {x: find(x) for x in self.objects}
        return self._components

    def pi0(self) -> FinAbGroup:
        if self._pi0 is None:
            comp = self.components()
            reps = sorted(set(comp.values()), key=self.obj_index.__getitem__)
            self._pi0 = group_from_closure(reps, lambda a, b: comp[self.tensor(a, b)], comp[self.unit],
                                           labels=self.obj_label, name=f"pi0({self.name})")
        return self._pi0

    def pi1(self) -> FinAbGroup:
        if self._pi1 is None:
            I = self.unit
            self._pi1 = group_from_closure(self.hom(I, I), self.compose, self.identity(I),
                                           labels=lambda f: str(f.data), name=f"pi1({self.name})")
        return self._pi1


def trivial_catgroup(name: str = "1") -> CatGroup:
    star = Mor(0, 0, 0)
    return CatGroup(name, [0], 0, lambda y: [star], lambda g, f: star, lambda x: star,
                    lambda f: star, lambda x, y: 0, lambda f, g: star)


# law checking ----------------------------------------------------------------

class Coverage(NamedTuple):
    law: str
    checked: int
    total: int
    mode: str  # "exhaustive" | "sampled"


@dataclass
class LawReport:
    subject: str
    ok: bool = True
    law: str | None = None
    witness: object = None
    coverage: list = field(default_factory=list)

    def fail(self, law, witness):
        if self.ok:
            self.ok, self.law, self.witness = False, law, witness

    @property
    def exhaustive(self) -> bool:
        return all(c.mode == "exhaustive" for c in self.coverage)


class _Checker:
    """Runs one law over all cases, or a seeded sample of ``budget`` cases when there are more."""

    def __init__(self, report: LawReport, budget: int | None, seed: int):
        self.report = report
        self.budget = budget
        self.rng = random.Random(seed)

    def run(self, law: str, total: int, enumerate_all: Callable, draw: Callable, check: Callable):
        if not self.report.ok:
            return
        if self.budget is None or total <= self.budget:
            cases, mode, n = enumerate_all(), "exhaustive", total
        else:
            cases, mode, n = (draw(self.rng) for _ in range(self.budget)), "sampled", self.budget
        for case in cases:
            if not check(*case):
                self.report.fail(law, case)
                break
        self.report.coverage.append(Coverage(law, n, total, mode))


def _pick(rng: random.Random, seq):
    # noticeably cheaper than Random.choice on the hot sampling path
    return seq[int(rng.random() * len(seq))]


def _composable_pairs(C: CatGroup):
    """All ``(g, f)`` with ``f`` ending where ``g`` starts."""
    return ((g, f) for g in C.morphisms() for f in C.into(g.src))


def _draw_pair(C: CatGroup):
    M = C.morphisms()

    def draw(rng):
        g = _pick(rng, M)
        return g, _pick(rng, C.into(g.src))
    return draw


def validate_catgroup(C: CatGroup, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> LawReport:
    """Check the strict symmetric cat-group axioms, reporting the first counterexample.

    Laws whose case count exceeds ``budget`` are checked on a seeded random
    sample; ``budget=None`` forces exhaustive checking everywhere.  The
    coverage of every law is recorded in the report.
    """
    rep = LawReport(C.name)
    chk = _Checker(rep, budget, seed)
    O = C.objects
    oi = C.obj_index
    n = len(O)
    if C.unit not in oi:
        rep.fail("unit is an object", C.unit)
        return rep

    # object monoid: tabulated once, then checked with numpy
    T = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(O):
        for j, y in enumerate(O):
            z = C.tensor(x, y)
            if z not in oi:
                rep.fail("tensor closed on objects", (x, y, z))
                return rep
            T[i, j] = oi[z]
    rep.coverage.append(Coverage("tensor closed on objects", n * n, n * n, "exhaustive"))
    u = oi[C.unit]
    if not (T[u] == np.arange(n)).all() or not (T[:, u] == np.arange(n)).all():
        bad = int(np.argmax((T[u] != np.arange(n)) | (T[:, u] != np.arange(n))))
        rep.fail("strict unit on objects", O[bad])
        return rep
    bad = np.argwhere(T != T.T)
    if len(bad):
        rep.fail("strict symmetry on objects", (O[bad[0][0]], O[bad[0][1]]))
        return rep
    w = associativity_witness(T)
    if w is not None:
        rep.fail("strict associativity on objects", tuple(O[i] for i in w))
        return rep
    rep.coverage.append(Coverage("object monoid laws", n ** 3, n ** 3, "exhaustive"))

    M = C.morphisms()
    seen = set()
    for y in O:
        for f in C.into(y):
            if f.tgt != y or f.src not in oi:
                rep.fail("morphisms have valid endpoints", f)
                return rep
            if f in seen:
                rep.fail("morphism listed once", f)
                return rep
            seen.add(f)
    rep.coverage.append(Coverage("morphism endpoints", len(M), len(M), "exhaustive"))

    is_mor = C.is_morphism
    ident, comp, inv, tm = C.identity, C.compose, C.inverse, C.tensor_mor

    def unit_laws(f):
        i1, i0 = ident(f.tgt), ident(f.src)
        return (is_mor(i1) and i1.src == i1.tgt == f.tgt and comp(i1, f) == f
                and comp(f, i0) == f)

    chk.run("identity laws", len(M), lambda: ((f,) for f in M), lambda r: (_pick(r, M),), unit_laws)

    def inverse_law(f):
        g = inv(f)
        return (is_mor(g) and g.src == f.tgt and g.tgt == f.src
                and comp(g, f) == ident(f.src) and comp(f, g) == ident(f.tgt))

    chk.run("inverses", len(M), lambda: ((f,) for f in M), lambda r: (_pick(r, M),), inverse_law)

    n_pairs = sum(len(C.into(g.src)) for g in M)

    def closed(g, f):
        h = comp(g, f)
        return is_mor(h) and h.src == f.src and h.tgt == g.tgt

    chk.run("composition lands in hom-sets", n_pairs, lambda: _composable_pairs(C), _draw_pair(C), closed)

    def triples():
        for h in M:
            for g in C.into(h.src):
                for f in C.into(g.src):
                    yield h, g, f

    def draw_triple(r):
        h = _pick(r, M)
        g = _pick(r, C.into(h.src))
        return h, g, _pick(r, C.into(g.src))

    out_deg: dict = {}
    for f in M:
        out_deg[f.src] = out_deg.get(f.src, 0) + 1
    n_triples = sum(len(C.into(g.src)) * out_deg.get(g.tgt, 0) for g in M)
    chk.run("composition associative", n_triples, triples, draw_triple,
            lambda h, g, f: comp(h, comp(g, f)) == comp(comp(h, g), f))

    def typed(f, g):
        h = tm(f, g)
        return is_mor(h) and h.src == C.tensor(f.src, g.src) and h.tgt == C.tensor(f.tgt, g.tgt)

    pair_all = lambda: itertools.product(M, M)
    pair_draw = lambda r: (_pick(r, M), _pick(r, M))
    chk.run("tensor of morphisms typed", len(M) ** 2, pair_all, pair_draw, typed)
    chk.run("tensor symmetric on morphisms", len(M) ** 2, pair_all, pair_draw,
            lambda f, g: tm(f, g) == tm(g, f))
    idI = ident(C.unit)
    chk.run("tensor unit on morphisms", len(M), lambda: ((f,) for f in M), lambda r: (_pick(r, M),),
            lambda f: tm(idI, f) == f and tm(f, idI) == f)
    chk.run("tensor associative on morphisms", len(M) ** 3, lambda: itertools.product(M, M, M),
            lambda r: (_pick(r, M), _pick(r, M), _pick(r, M)),
            lambda f, g, h: tm(tm(f, g), h) == tm(f, tm(g, h)))
    chk.run("tensor preserves identities", n * n, lambda: itertools.product(O, O),
            lambda r: (_pick(r, O), _pick(r, O)),
            lambda x, y: tm(ident(x), ident(y)) == ident(C.tensor(x, y)))

    def interchange(g, f, g2, f2):
        return tm(comp(g, f), comp(g2, f2)) == comp(tm(g, g2), tm(f, f2))

    def quads():
        for g, f in _composable_pairs(C):
            for g2, f2 in _composable_pairs(C):
                yield g, f, g2, f2

    dp = _draw_pair(C)
    chk.run("interchange law", n_pairs ** 2, quads, lambda r: dp(r) + dp(r), interchange)

    if rep.ok:
        comp_of = C.components()
        cI = comp_of[C.unit]
        cvec = np.array([oi[comp_of[x]] for x in O])
        hits = (cvec[T] == oi[cI]).any(axis=1)
        if not hits.all():
            rep.fail("every object tensor-invertible up to isomorphism", O[int(np.argmin(hits))])
        rep.coverage.append(Coverage("tensor inverses", n * n, n * n, "exhaustive"))
    return rep


# functors ----------------------------------------------------------------------

class MonFunctor:
    """A symmetric monoidal functor ``source -> target``.

    ``mu(x, y)`` is a morphism ``F(x) (x) F(y) -> F(x (x) y)`` and ``iota`` a
    morphism ``I -> F(I)``; both default to identities (strict functor).
    """

    def __init__(self, source: CatGroup, target: CatGroup, fobj: Callable, fmor: Callable,
                 mu: Callable | None = None, iota: Mor | None = None, name: str = "F"):
        self.source = source
        self.target = target
        cache: dict = {}

        def cached(x):
            y = cache.get(x)
            if y is None:
                y = cache[x] = fobj(x)
            return y

        self.fobj = cached
        self.fmor = fmor
        self.name = name
        self.strict = mu is None and iota is None
        if mu is None:
            mu = lambda x, y: target.identity(target.tensor(cached(x), cached(y)))
        self.mu = mu
        self.iota = iota if iota is not None else target.identity(target.unit)

    def __repr__(self):
        return f"MonFunctor({self.name}: {self.source.name} -> {self.target.name})"


def identity_functor(C: CatGroup) -> MonFunctor:
    return MonFunctor(C, C, lambda x: x, lambda f: f, name=f"id_{C.name}")


def compose_functors(F: MonFunctor, G: MonFunctor) -> MonFunctor:
    """``G . F`` with composite coherence witnesses."""
    if F.target is not G.source:
        raise ValueError("functors are not composable")
    H = G.target
    mu = lambda x, y: H.compose(G.fmor(F.mu(x, y)), G.mu(F.fobj(x), F.fobj(y)))
    iota = H.compose(G.fmor(F.iota), G.iota)
    return MonFunctor(F.source, H, lambda x: G.fobj(F.fobj(x)), lambda f: G.fmor(F.fmor(f)),
                      mu=mu, iota=iota, name=f"{G.name}.{F.name}")


def validate_functor(F: MonFunctor, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> LawReport:
    S, T = F.source, F.target
    rep = LawReport(F.name)
    chk = _Checker(rep, budget, seed)
    O, M = S.objects, S.morphisms()
    for x in O:
        if F.fobj(x) not in T.obj_index:
            rep.fail("objects map to objects", x)
            return rep
    for f in M:
        g = F.fmor(f)
        if not (T.is_morphism(g) and g.src == F.fobj(f.src) and g.tgt == F.fobj(f.tgt)):
            rep.fail("morphisms map to morphisms", f)
            return rep
    rep.coverage.append(Coverage("typing", len(O) + len(M), len(O) + len(M), "exhaustive"))
    for x in O:
        if F.fmor(S.identity(x)) != T.identity(F.fobj(x)):
            rep.fail("preserves identities", x)
            return rep
    n_pairs = sum(len(S.into(g.src)) for g in M)
    chk.run("preserves composition", n_pairs, lambda: _composable_pairs(S), _draw_pair(S),
            lambda g, f: F.fmor(S.compose(g, f)) == T.compose(F.fmor(g), F.fmor(f)))

    fo, fm, mu = F.fobj, F.fmor, F.mu
    iota = F.iota
    I, IT = S.unit, T.unit
    if not (T.is_morphism(iota) and iota.src == IT and iota.tgt == fo(I)):
        rep.fail("unit witness typed", iota)
        return rep

    def mu_typed(x, y):
        m = mu(x, y)
        return T.is_morphism(m) and m.src == T.tensor(fo(x), fo(y)) and m.tgt == fo(S.tensor(x, y))

    obj_pairs = lambda: itertools.product(O, O)
    draw_obj2 = lambda r: (_pick(r, O), _pick(r, O))
    chk.run("tensor witness typed", len(O) ** 2, obj_pairs, draw_obj2, mu_typed)
    chk.run("tensor witness symmetric", len(O) ** 2, obj_pairs, draw_obj2,
            lambda x, y: mu(x, y) == mu(y, x))

    def natural(f, g):
        lhs = T.compose(fm(S.tensor_mor(f, g)), mu(f.src, g.src))
        rhs = T.compose(mu(f.tgt, g.tgt), T.tensor_mor(fm(f), fm(g)))
        return lhs == rhs

    chk.run("tensor witness natural", len(M) ** 2, lambda: itertools.product(M, M),
            lambda r: (_pick(r, M), _pick(r, M)), natural)

    def assoc(x, y, z):
        lhs = T.compose(mu(S.tensor(x, y), z), T.tensor_mor(mu(x, y), T.identity(fo(z))))
        rhs = T.compose(mu(x, S.tensor(y, z)), T.tensor_mor(T.identity(fo(x)), mu(y, z)))
        return lhs == rhs

    chk.run("associativity coherence", len(O) ** 3, lambda: itertools.product(O, O, O),
            lambda r: (_pick(r, O), _pick(r, O), _pick(r, O)), assoc)

    def unital(x):
        return T.compose(mu(I, x), T.tensor_mor(iota, T.identity(fo(x)))) == T.identity(fo(x))

    chk.run("unit coherence", len(O), lambda: ((x,) for x in O), lambda r: (_pick(r, O),), unital)
    return rep


@dataclass
class NatToTrivial:
    """Components ``kappa(x): F(x) -> I`` of a monoidal transformation to the constant functor."""
    F: MonFunctor
    kappa: Callable


def validate_nat(N: NatToTrivial, budget: int | None = DEFAULT_BUDGET, seed: int = 0) -> LawReport:
    F = N.F
    S, T = F.source, F.target
    rep = LawReport(f"kappa on {F.name}")
    chk = _Checker(rep, budget, seed)
    O, M = S.objects, S.morphisms()
    for x in O:
        k = N.kappa(x)
        if not (T.is_morphism(k) and k.src == F.fobj(x) and k.tgt == T.unit):
            rep.fail("components typed", x)
            return rep
    chk.run("naturality", len(M), lambda: ((f,) for f in M), lambda r: (_pick(r, M),),
            lambda f: T.compose(N.kappa(f.tgt), F.fmor(f)) == N.kappa(f.src))
    chk.run("monoidal", len(O) ** 2, lambda: itertools.product(O, O),
            lambda r: (_pick(r, O), _pick(r, O)),
            lambda x, y: T.compose(N.kappa(S.tensor(x, y)), F.mu(x, y))
            == T.tensor_mor(N.kappa(x), N.kappa(y)))
    if rep.ok and T.compose(N.kappa(S.unit), F.iota) != T.identity(T.unit):
        rep.fail("unital", S.unit)
    return rep


# pi_0 / pi_1 of functors ------------------------------------------------------------

def induced_pi0(F: MonFunctor) -> GroupHom:
    S, T = F.source, F.target
    cs, ct = S.components(), T.components()
    image = {}
    for x in S.objects:
        c = ct[F.fobj(x)]
        if image.setdefault(cs[x], c) != c:
            raise AssertionError(f"{F.name} does not respect components at {x!r}")
    return GroupHom(S.pi0(), T.pi0(), image, name=f"pi0({F.name})")


def induced_pi1(F: MonFunctor) -> GroupHom:
    """``phi -> iota^-1 . F(phi) . iota`` on automorphisms of the unit."""
    T = F.target
    iota = F.iota
    back = T.inverse(iota)
    return GroupHom(F.source.pi1(), T.pi1(),
                    lambda phi: T.compose(back, T.compose(F.fmor(phi), iota)), name=f"pi1({F.name})")


@dataclass
class FunctorProps:
    essentially_surjective: bool
    full: bool
    faithful: bool
    witnesses: dict
    pi0_map: GroupHom
    pi1_map: GroupHom
    routes_agree: bool

    @property
    def equivalence(self) -> bool:
        return self.essentially_surjective and self.full and self.faithful

    @property
    def equivalence_by_pi(self) -> bool:
        return self.pi0_map.is_isomorphism() and self.pi1_map.is_isomorphism()


def functor_props(F: MonFunctor) -> FunctorProps:
    """Decide essential surjectivity, fullness and faithfulness by enumeration.

    The same three properties are also read off the induced maps on pi0 and
    pi1 (faithful <=> pi1 injective; full <=> pi1 surjective and pi0 injective;
    essentially surjective <=> pi0 surjective) and ``routes_agree`` records
    whether both routes coincide.
    """
    S, T = F.source, F.target
    witnesses = {}
    ct = T.components()
    hit = {ct[F.fobj(x)] for x in S.objects}
    missing = [y for y in T.objects if ct[y] not in hit]
    ess = not missing
    if missing:
        witnesses["essentially_surjective"] = missing[0]

    full = faithful = True
    for y in S.objects:
        fy = F.fobj(y)
        targets: dict = {}
        for g in T.into(fy):
            targets.setdefault(g.src, set()).add(g)
        images: dict = {}
        counts: dict = {}
        for f in S.into(y):
            images.setdefault(f.src, set()).add(F.fmor(f))
            counts[f.src] = counts.get(f.src, 0) + 1
        for x in S.objects:
            img = images.get(x, set())
            if faithful and len(img) < counts.get(x, 0):
                faithful = False
                witnesses["faithful"] = (x, y)
            tgt = targets.get(F.fobj(x), set())
            if full and img != tgt:
                full = False
                extra = sorted(tgt - img, key=repr)
                witnesses["full"] = (x, y, extra[0] if extra else None)
        if not (full or faithful):
            break

    p0, p1 = induced_pi0(F), induced_pi1(F)
    agree = (ess == p0.is_surjective() and faithful == p1.is_injective()
             and full == (p1.is_surjective() and p0.is_injective()))
    return FunctorProps(ess, full, faithful, witnesses, p0, p1, agree)


def naturally_isomorphic_objectwise(F: MonFunctor, G: MonFunctor) -> bool:
    """Object-wise isomorphism search plus agreement of the induced maps on pi0 and pi1."""
    if F.source is not G.source or F.target is not G.target:
        return False
    T = F.target
    if any(not T.hom(F.fobj(x), G.fobj(x)) for x in F.source.objects):
        return False
    a0, b0 = induced_pi0(F), induced_pi0(G)
    a1, b1 = induced_pi1(F), induced_pi1(G)
    return (all(a0(c) == b0(c) for c in F.source.pi0().elements)
            and all(a1(c) == b1(c) for c in F.source.pi1().elements))


# G_alpha and 2-kernels ------------------------------------------------------------------

def catgroup_from_hom(alpha: GroupHom, name: str | None = None) -> CatGroup:
    """Objects are elements of the target; ``g: h1 -> h2`` whenever ``h1 = h2 + alpha(g)``."""
    G, H = alpha.source, alpha.target
    gel = G.elements

    def into(h2):
        return [Mor(H.op(h2, alpha(g)), h2, g) for g in gel]

    return CatGroup(
        name or f"G[{alpha.name}]", H.elements, H.identity, into,
        compose=lambda g2, g1: Mor(g1.src, g2.tgt, G.op(g1.data, g2.data)),
        identity=lambda h: Mor(h, h, G.identity),
        inverse=lambda f: Mor(f.tgt, f.src, G.inv(f.data)),
        tensor=H.op,
        tensor_mor=lambda f, g: Mor(H.op(f.src, g.src), H.op(f.tgt, g.tgt), G.op(f.data, g.data)),
        obj_label=H.label)


def functor_from_square(Ga: CatGroup, Gb: CatGroup, top: GroupHom, bottom: GroupHom,
                        alpha: GroupHom, beta: GroupHom, name: str = "F") -> MonFunctor:
    """The strict functor ``G_alpha -> G_beta`` of a commuting square ``beta.top = bottom.alpha``."""
    for g in alpha.source.elements:
        if beta(top(g)) != bottom(alpha(g)):
            raise ValueError(f"square does not commute at {g!r}")
    return MonFunctor(Ga, Gb, bottom, lambda f: Mor(bottom(f.src), bottom(f.tgt), top(f.data)), name=name)


def two_kernel(F: MonFunctor, name: str | None = None) -> tuple[CatGroup, MonFunctor]:
    """Pairs ``(X, x)`` with ``x: I -> F(X)``; arrows ``f: X -> Y`` with ``y = F(f) . x``."""
    G, H = F.source, F.target
    IH = H.unit
    objects = [(X, x) for X in G.objects for x in H.hom(IH, F.fobj(X))]

    def into(Y):
        y = Y[1]
        return [Mor((f.src, H.compose(H.inverse(F.fmor(f)), y)), Y, f) for f in G.into(Y[0])]

    def tensor(A, B):
        (X, x), (Y, y) = A, B
        return (G.tensor(X, Y), H.compose(F.mu(X, Y), H.tensor_mor(x, y)))

    K = CatGroup(
        name or f"2-ker({F.name})", objects, (G.unit, F.iota), into,
        compose=lambda g, f: Mor(f.src, g.tgt, G.compose(g.data, f.data)),
        identity=lambda A: Mor(A, A, G.identity(A[0])),
        inverse=lambda f: Mor(f.tgt, f.src, G.inverse(f.data)),
        tensor=tensor,
        tensor_mor=lambda f, g: Mor(tensor(f.src, g.src), tensor(f.tgt, g.tgt), G.tensor_mor(f.data, g.data)),
        obj_label=lambda A: f"({G.obj_label(A[0])},{A[1].data})")
    P = MonFunctor(K, G, lambda A: A[0], lambda f: f.data, name=f"pr_{F.name}")
    return K, P


def induced_to_two_kernel(alpha: MonFunctor, beta: MonFunctor, kappa: NatToTrivial,
                          K: CatGroup | None = None, budget: int | None = DEFAULT_BUDGET) -> MonFunctor:
    """``gamma(X) = (alpha(X), kappa(X)^-1)`` into ``2-ker(beta)``."""
    H = beta.target
    if kappa.F.source is not alpha.source or kappa.F.target is not H:
        raise ValueError("kappa must live on beta . alpha")
    nat = validate_nat(kappa, budget=budget)
    if not nat.ok:
        raise ValueError(f"kappa is not a monoidal natural transformation: {nat.law} at {nat.witness!r}")
    if K is None:
        K, _ = two_kernel(beta)
    fo = lambda X: (alpha.fobj(X), H.inverse(kappa.kappa(X)))
    fm = lambda f: Mor(fo(f.src), fo(f.tgt), alpha.fmor(f))
    mu = lambda X, Y: Mor(K.tensor(fo(X), fo(Y)), fo(alpha.source.tensor(X, Y)), alpha.mu(X, Y))
    iota = Mor(K.unit, fo(alpha.source.unit), alpha.iota)
    return MonFunctor(alpha.source, K, fo, fm, mu=mu, iota=iota, name="gamma")


@dataclass
class SixTerm:
    groups: list
    maps: list
    report: ExactnessReport
    kernel: CatGroup


def six_term(F: MonFunctor, K: CatGroup | None = None, P: MonFunctor | None = None) -> SixTerm:
    """``0 -> pi1(K) -> pi1(G) -> pi1(H) -> pi0(K) -> pi0(G) -> pi0(H)`` for ``K = 2-ker(F)``."""
    if K is None:
        K, P = two_kernel(F)
    G, H = F.source, F.target
    kc = K.components()
    iota = F.iota
    m1 = induced_pi1(P)
    m2 = induced_pi1(F)
    m3 = GroupHom(H.pi1(), K.pi0(), lambda h: kc[(G.unit, H.compose(iota, h))], name="connecting")
    m4 = induced_pi0(P)
    m5 = induced_pi0(F)
    maps = [m1, m2, m3, m4, m5]
    report = check_exact_sequence(maps, positions=range(1, 5), leading_zero=True)
    groups = [K.pi1(), G.pi1(), H.pi1(), K.pi0(), G.pi0(), H.pi0()]
    return SixTerm(groups, maps, report, K)


@dataclass
class TwoKerComparison:
    pb: FinAbGroup
    iota: GroupHom
    g_iota: CatGroup
    kernel: CatGroup
    comparison: MonFunctor
    props: FunctorProps
    pi0_iso: bool
    pi1_iso: bool

    @property
    def ok(self) -> bool:
        return self.props.equivalence and self.pi0_iso and self.pi1_iso and self.props.routes_agree


def two_kernel_of_square(alpha: GroupHom, beta: GroupHom, top: GroupHom, bottom: GroupHom,
                         F: MonFunctor | None = None, K: CatGroup | None = None) -> TwoKerComparison:
    """Compare ``2-ker(G_alpha -> G_beta)`` with ``G_i`` for ``i: G0 -> Pb``, ``i(g) = (alpha g, top g)``.

    The comparison functor sends ``(g1, h0)`` in ``Pb`` to ``(g1, -h0)``.
    """
    if F is None:
        F = functor_from_square(catgroup_from_hom(alpha), catgroup_from_hom(beta), top, bottom,
                                alpha, beta)
    if K is None:
        K, _ = two_kernel(F)
    Pb, _, _ = pullback(bottom, beta)
    H0 = beta.source
    G1 = alpha.target
    i = GroupHom(alpha.source, Pb, lambda g: (alpha(g), top(g)), name="i")
    Gi = catgroup_from_hom(i, name="G_i")
    Hcat = F.target

    def fo(x):
        g1, h0 = x
        return (g1, Mor(Hcat.unit, bottom(g1), H0.inv(h0)))

    Psi = MonFunctor(Gi, K, fo, lambda f: Mor(fo(f.src), fo(f.tgt),
                                              Mor(f.src[0], f.tgt[0], f.data)), name="Psi")
    props = functor_props(Psi)
    return TwoKerComparison(Pb, i, Gi, K, Psi, props,
                            invariant_factors(K.pi0()) == invariant_factors(i.cokernel()[0]),
                            invariant_factors(K.pi1()) == invariant_factors(i.kernel()), )
