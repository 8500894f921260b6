"""Property suites over one ring and admissible pair, reported as flat check records."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import galois as gal
from . import qu
from .abgroup import GroupHom, group_from_closure, invariant_factors
from .catgroup import (CatGroup, LawReport, catgroup_from_hom, functor_from_square, six_term,
                       validate_catgroup, validate_functor, validate_nat)
from .qu import PairPQ
from .ring import FiniteRing, quotient_by_principal

SUITES = ("free", "galois", "stack")
DEFAULT_SUITE_CAP = 64
TPUSH_CAP = 8
COTENSOR_ALL_PAIRS_CAP = 4


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witness: str | None = None
    reason: str | None = None
    detail: str | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        for key in ("witness", "reason", "detail"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


def _verdict(name: str, ok: bool, witness=None, detail: str | None = None) -> Check:
    return Check(name, "pass" if ok else "fail", None if ok else str(witness), detail=detail)


def _skip(name: str, reason: str, detail: str | None = None) -> Check:
    return Check(name, "skipped", reason=reason, detail=detail)


def _law(name: str, rep: LawReport) -> Check:
    sampled = [c for c in rep.coverage if c.mode == "sampled"]
    detail = None
    if sampled:
        detail = f"{len(sampled)} of {len(rep.coverage)} laws sampled"
    return _verdict(name, rep.ok, f"{rep.law}: {rep.witness!r}", detail)


# cached constructions, shared by the suites and the acceptance tests ---------------------------

@lru_cache(maxsize=None)
def qu_f(P: PairPQ) -> CatGroup:
    return qu.build_qu_f(P)


@lru_cache(maxsize=None)
def triple(P: PairPQ) -> qu.Triple:
    return qu.build_triple(P, qu_f(P))


@lru_cache(maxsize=None)
def gamma(P: PairPQ) -> qu.GammaReport:
    return qu.gamma_check(P, triple(P))


@lru_cache(maxsize=None)
def vs(P: PairPQ) -> qu.VSData:
    return qu.build_VS(P, qu_f(P))


@lru_cache(maxsize=None)
def hopf(P: PairPQ) -> gal.HopfJ:
    return gal.build_J(P)


def clear_caches():
    for fn in (qu_f, triple, gamma, vs, hopf):
        fn.cache_clear()


# group table ---------------------------------------------------------------------------------

def group_table(P: PairPQ) -> dict[str, list[int]]:
    R = P.R
    T = triple(P)
    mu2, U2 = qu.mu2_u2(R)
    _, U2_red = qu.u2_reduction(P, T)
    V = vs(P)
    out = {
        "Z_pq": qu.z_pq_group(P),
        "mu2": mu2,
        "U2": U2,
        "U2(R/p^2R)": U2_red,
    }
    for name, C in (("Qu_f", qu_f(P)), ("G", T.G.cat), ("G^pq", T.gpq.cat),
                    ("V^pq", V.frakV), ("S^pq", V.frakS)):
        out[f"pi0({name})"] = C.pi0()
        out[f"pi1({name})"] = C.pi1()
    out["V"] = V.frakV.pi0()
    out["S"] = V.frakS.pi0()
    return {k: invariant_factors(G) for k, G in out.items()}


# the free suite ----------------------------------------------------------------------------------

def free_checks(P: PairPQ) -> list[Check]:
    R, p, q = P.R, P.p, P.q
    Q = qu_f(P)
    T = triple(P)
    checks = [
        _law("qu.catgroup", validate_catgroup(Q)),
        _verdict("qu.duality", qu.check_duality(P, Q) is None, qu.check_duality(P, Q)),
    ]
    iso = qu.pi1_identification(P, Q)
    checks.append(_verdict("qu.pi1_identification", iso.is_isomorphism(), "not bijective"))
    Z = qu.z_pq_group(P)
    bad = [r for r in Z.elements if R.pow(R.add(R.one, R.mul(p, r)), 2) != R.one]
    checks.append(_verdict("qu.pi1_in_mu2", not bad, bad[:1]))

    checks.append(_law("G.catgroup", validate_catgroup(T.G.cat)))
    checks.append(_law("Gpq.catgroup", validate_catgroup(T.gpq.cat)))
    checks.append(_law("alpha.functor", validate_functor(T.alpha)))
    checks.append(_law("beta.functor", validate_functor(T.beta)))
    checks.append(_law("delta.natural", validate_nat(T.delta)))
    w = qu.morphism_identity_witness(T)
    checks.append(_verdict("alpha.morphism_identity", w is None, w))
    st = six_term(T.beta, K=gamma(P).kernel, P=qu.two_kernel_projection(gamma(P).kernel, T.beta))
    checks.append(_verdict("six_term.beta", st.report.ok, st.report.failures()))

    g = gamma(P)
    checks.append(_verdict("gamma.functor", g.functor_ok, "functor or coherence law"))
    checks.append(_verdict("gamma.essentially_surjective", g.props.essentially_surjective,
                           g.props.witnesses.get("essentially_surjective")))
    checks.append(_verdict("gamma.routes_agree", g.props.routes_agree, "pi0/pi1 route disagrees"))
    checks.append(_verdict("gamma.pullback_model", g.pullback_model_ok, "2-kernel model mismatch"))
    detail = _gamma_detail(g)
    if g.p_kind == "unit":
        checks.append(_verdict("gamma.equivalence", g.props.equivalence, g.props.witnesses, detail))
    else:
        checks.append(_skip("gamma.equivalence", g.notes[0], detail))
    st_g = six_term(g.gamma)
    checks.append(_verdict("six_term.gamma", st_g.report.ok, st_g.report.failures()))

    c = qu.u2_image_check(P, T, g)
    checks.append(_verdict("u2.image_is_kernel", c.image_is_kernel, f"image {c.image} kernel {c.kernel}"))
    if c.unit_p_exact is None:
        checks.append(_skip("u2.unit_p_sequence", f"hypothesis p-unit absent: p is a {P.p_kind()}"))
    else:
        checks.append(_verdict("u2.unit_p_sequence", c.unit_p_exact, "sequence not exact"))
    if c.equivalent_to_G is None:
        checks.append(_skip("u2.qu_equivalent_to_G", "pair is not (1, -2)"))
    else:
        checks.append(_verdict("u2.qu_equivalent_to_G", c.equivalent_to_G, "alpha_f not an equivalence"))

    V = vs(P)
    checks.append(_law("V.catgroup", validate_catgroup(V.frakV)))
    checks.append(_law("S.catgroup", validate_catgroup(V.frakS)))
    checks.append(_law("rho.functor", validate_functor(V.rho)))
    checks.append(_law("omega.functor", validate_functor(V.omega)))
    w = qu.frakS_witness_failure(P, V.frakS)
    checks.append(_verdict("S.witness_independent", w is None, w))
    s = qu.ses_VS(P, V)
    checks.append(_verdict("ses.exact", s.exact, "0 -> V -> sQu -> S -> 0 not exact"))
    checks.append(_verdict("ses.pi1_V", s.pi1_V_ok, "pi1(V) mismatch"))
    if s.local or s.p_in_radical:
        checks.append(_verdict("ses.S_trivial", s.S_trivial, f"S = {invariant_factors(s.S)}"))
    else:
        checks.append(_skip("ses.S_trivial", "ring not local and p not in the radical"))
    if s.p_zero_formula is None:
        checks.append(_skip("ses.p_zero_formula", "p is not zero"))
    else:
        checks.append(_verdict("ses.p_zero_formula", s.p_zero_formula, "sQu not R/R0"))

    if R.n <= TPUSH_CAP:
        units = list(R.units)
        for i, t in enumerate(units):
            t2 = units[(i + 1) % len(units)]
            rep = qu.t_push_check(P, t, t2, source=Q)
            checks.append(_verdict(f"t_push[{R.label(t)}]", rep.ok, rep))
    else:
        checks.append(_skip("t_push", f"|R| = {R.n} exceeds t_push cap {TPUSH_CAP}"))
    return checks


def _gamma_detail(g: qu.GammaReport) -> str:
    parts = ["faithful" if g.props.faithful else f"not faithful (witness {g.props.witnesses.get('faithful')})",
             "full" if g.props.full else f"not full (witness {g.props.witnesses.get('full')})"]
    return ", ".join(parts)


# the stack suite -----------------------------------------------------------------------------

def stack_checks(P: PairPQ) -> list[Check]:
    T = triple(P)
    L = qu.gpq_check(T.gpq)
    d = qu.dis_check(P.R, T.G)
    return [
        _verdict("Gpq.lift_independent", L.lift_independent, T.gpq.lift_witness),
        _verdict("Gpq.image_of_Sq", L.image_matches, "Im Sq differs from squares"),
        _verdict("Gpq.kernel_of_Sq", L.kernel_matches, "Ker Sq differs from Im(mu2)"),
        _verdict("Gpq.pi0", L.pi0_is_U2, "pi0 differs from U2(R/p^2R)"),
        _verdict("Gpq.pi1", L.pi1_matches, "pi1 differs from Im(mu2)"),
        _verdict("dis.equivalent_to_G", d.equivalent_to_G, "comparison functor"),
        _verdict("dis.pi0", d.pi0_is_U2, "pi0 differs from U2"),
        _verdict("dis.pi1", d.pi1_is_mu2, "pi1 differs from mu2"),
    ]


# the galois suite ----------------------------------------------------------------------------

def galois_checks(P: PairPQ, cap: int = gal.DEFAULT_GALOIS_CAP) -> list[Check]:
    R = P.R
    J = hopf(P)
    failed = [k for k, v in J.checks.items() if not v]
    checks = [_verdict("J.hopf", not failed, failed)]
    if R.n > cap:
        reason = f"|R| = {R.n} exceeds galois cap {cap}"
        return checks + [_skip(name, reason) for name in
                         ("galois.realize", "galois.full_faithful", "galois.functorial",
                          "galois.classification", "galois.criterion", "galois.module_automorphisms",
                          "galois.cotensor")]
    Q = qu_f(P)
    bad = [X for X in Q.objects if not all(gal.validate_galois(J, gal.realize(P, X)).values())]
    checks.append(_verdict("galois.realize", not bad, bad[:1]))
    ff = gal.realize_full_faithful(P, Q, J)
    checks.append(_verdict("galois.full_faithful", ff.ok, ff.witness))
    w = gal.realize_is_functorial(P, Q, limit=5000)
    checks.append(_verdict("galois.functorial", w is None, w))
    cls = gal.classify_free_galois(P, cap=cap, Q=Q, J=J)
    checks.append(_verdict("galois.classification", cls.ok,
                           cls.normal_form_violations[:1] or "classes do not match pi0",
                           detail=f"{len(cls.survivors)} survivors in {len(cls.classes)} classes"))
    w = gal.criterion_agreement(J)
    checks.append(_verdict("galois.criterion", w is None, w))
    checks.append(_verdict("galois.module_automorphisms", gal.module_automorphisms_fixing_one(R),
                           "automorphism parametrization"))
    if R.n <= COTENSOR_ALL_PAIRS_CAP:
        objs = list(Q.objects)
        scope = "all object pairs"
    else:
        objs = sorted(set(Q.components().values()), key=Q.obj_index.__getitem__)
        scope = "pairs of component representatives"
    bad = [(X, Y) for X in objs for Y in objs if not gal.cotensor_matches_tensor(P, X, Y, Q, J)]
    checks.append(_verdict("galois.cotensor", not bad, bad[:1], detail=scope))
    return checks


def run_suites(P: PairPQ, suites=SUITES, galois_cap: int = gal.DEFAULT_GALOIS_CAP) -> list[Check]:
    out: list[Check] = []
    if "free" in suites:
        out += free_checks(P)
    if "galois" in suites:
        out += galois_checks(P, galois_cap)
    if "stack" in suites:
        out += stack_checks(P)
    return out


# random squares for the six-term sequence ------------------------------------------------------

def _additive_group(R: FiniteRing):
    return group_from_closure(R.elements, R.add, R.zero, labels=R.label, name="(R,+)")


def random_squares(R: FiniteRing, count: int = 20, seed: int = 0) -> list[tuple]:
    """Commuting squares ``beta . top = bottom . alpha`` of abelian groups built from ``R``.

    Three families: multiplications on ``(R, +)``, power maps on ``R*`` and
    reductions ``R -> R/sR``.  Each item is ``(alpha, beta, top, bottom)``.
    """
    rng = random.Random(seed)
    add = _additive_group(R)
    U = qu.unit_group(R)
    out = []
    for k in range(count):
        family = k % 3
        if family == 0:
            a, b, s = (rng.choice(list(R.elements)) for _ in range(3))
            alpha = GroupHom(add, add, lambda x, a=a: R.mul(a, x), name=f"*{a}")
            beta = GroupHom(add, add, lambda x, b=b: R.mul(b, x), name=f"*{b}")
            top = GroupHom(add, add, lambda x, s=s, a=a: R.prod(a, s, x), name="top")
            bottom = GroupHom(add, add, lambda x, s=s, b=b: R.prod(b, s, x), name="bottom")
        elif family == 1:
            e, f, g = (rng.randrange(0, 4) for _ in range(3))
            alpha = GroupHom(U, U, lambda x, e=e: R.pow(x, e), name=f"^{e}")
            beta = GroupHom(U, U, lambda x, f=f: R.pow(x, f), name=f"^{f}")
            top = GroupHom(U, U, lambda x, e=e, g=g: R.pow(x, e * g), name="top")
            bottom = GroupHom(U, U, lambda x, f=f, g=g: R.pow(x, f * g), name="bottom")
        else:
            s = rng.choice(list(R.elements))
            a = rng.choice(list(R.elements))
            Qs = quotient_by_principal(R, s)
            addQ = _additive_group(Qs.quotient)
            S = Qs.quotient
            alpha = GroupHom(add, add, lambda x, a=a: R.mul(a, x), name=f"*{a}")
            a_bar = Qs.project(a)
            beta = GroupHom(addQ, addQ, lambda y, a_bar=a_bar: S.mul(a_bar, y), name=f"*{S.label(a_bar)}")
            top = GroupHom(add, addQ, Qs.project, name="mod s")
            bottom = top
        out.append((alpha, beta, top, bottom))
    return out


def square_six_term(alpha, beta, top, bottom):
    F = functor_from_square(catgroup_from_hom(alpha), catgroup_from_hom(beta), top, bottom, alpha, beta)
    return six_term(F)
