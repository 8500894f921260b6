import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catlab import galois as gal
from catlab.qu import PairPQ, build_qu_f
from catlab.ring import CapExceeded, admissible_pairs, make_zmod


@pytest.fixture(scope="module")
def J4(z4_21):
    return gal.build_J(z4_21)


@pytest.mark.parametrize("n", [3, 4, 5, 7, 8, 9])
def test_J_at_minus_two_one(n):
    R = make_zmod(n)
    P = PairPQ(R, R.from_int(-2), R.one)
    J = gal.build_J(P)
    assert J.ok
    assert J.eps_x == 0
    assert J.antipode_x == (0, 1)


@pytest.mark.parametrize("n", [1, 2, 4, 6, 8])
def test_J_axioms_for_every_pair(n):
    R = make_zmod(n)
    for p, q in admissible_pairs(R):
        J = gal.build_J(PairPQ(R, p, q))
        assert J.ok, J.checks


def test_realize_examples(z4_21):
    A = gal.realize(z4_21, (1, 1))
    assert (A.m, A.b) == (1, 1)
    assert (A.l0, A.l1, A.a, A.l3) == (0, 1, 1, 2)
    T = gal.realize(z4_21, (1, 0))
    assert (T.m, T.b, T.a, T.l3) == (z4_21.q, 0, 1, z4_21.p)


def test_realize_z8_criterion():
    P = PairPQ(make_zmod(8), 2, 3)
    A = gal.realize(P, (3, 1))
    assert A.m == 1
    assert gal.criterion_value(A) == 3
    assert all(gal.validate_galois(gal.build_J(P), A).values())


def test_realized_algebras_are_galois(z4_21, J4):
    for X in build_qu_f(z4_21).objects:
        A = gal.realize(z4_21, X)
        assert all(gal.validate_galois(J4, A).values())
        a, b = X
        R = z4_21.R
        assert gal.criterion_value(A) == R.neg(R.add(R.mul(a, a), R.prod(2, 2, b)))


def test_realize_morphism_example(z4_21, J4):
    Q = build_qu_f(z4_21)
    f = [g for g in Q.into((1, 0)) if g.data == (1, 1)][0]
    assert f.src == (3, 2)
    phi = gal.realize_morphism(z4_21, f)
    assert (phi.source.m, phi.source.b) == (3, 2)
    assert (phi.target.m, phi.target.b) == (1, 0)
    assert gal.map_checks(J4, phi.source, phi.target, phi.u, phi.r)[0]


def test_realize_identity(z4_21):
    Q = build_qu_f(z4_21)
    phi = gal.realize_morphism(z4_21, Q.identity((1, 1)))
    assert (phi.u, phi.r) == (1, 0) and phi.source == phi.target


def test_realize_respects_composition(z4_21):
    Q = build_qu_f(z4_21)
    g = [m for m in Q.into((1, 0)) if m.data == (3, 1)][0]
    f = [m for m in Q.into(g.src) if m.data == (1, 2)][0]
    lhs = gal.realize_morphism(z4_21, Q.compose(g, f))
    rhs = gal.compose_maps(z4_21, gal.realize_morphism(z4_21, g), gal.realize_morphism(z4_21, f))
    assert lhs == rhs
    assert gal.realize_is_functorial(z4_21, Q) is None


def test_full_and_faithful(z4_21, J4):
    rep = gal.realize_full_faithful(z4_21, J=J4)
    assert rep.ok and rep.pairs_checked == 64


def test_matrix_rows(z4_21, J4):
    A = gal.realize(z4_21, (1, 1))
    gm = gal.galois_matrix(J4, A)
    m, b, a, l3 = A.m, A.b, A.a, A.l3
    R = z4_21.R
    assert gm.rows == [[1, 0, 0, b], [0, 1, 1, m], [0, 0, a, R.mul(l3, b)],
                       [0, 0, l3, R.add(a, R.mul(l3, m))]]
    assert gm.invertible


def test_trivial_torsor_criterion(z4_21, J4):
    A = gal.realize(z4_21, (1, 0))
    assert gal.criterion_value(A) == 3
    assert gal.galois_matrix(J4, A).invertible


def test_degenerate_coaction_is_not_galois(z4_21, J4):
    A = gal.GaloisAlgebra(z4_21, 1, 0, 0, 1, 0, 0)
    assert gal.criterion_value(A) == 0
    assert not gal.galois_matrix(J4, A).invertible
    assert not gal.validate_galois(J4, A)["galois"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([4, 6]), st.data())
def test_matrix_verdict_matches_enumeration(n, data):
    R = make_zmod(n)
    p, q = data.draw(st.sampled_from(admissible_pairs(R)))
    P = PairPQ(R, p, q)
    params = data.draw(st.tuples(*[st.integers(0, n - 1)] * 6))
    gm = gal.galois_matrix(gal.build_J(P), gal.GaloisAlgebra(P, *params))
    assert gal.is_bijective_by_enumeration(R, gm.rows) == gm.invertible


@pytest.mark.parametrize("n", [4, 5, 6])
def test_criterion_agreement(n):
    R = make_zmod(n)
    for p, q in admissible_pairs(R):
        assert gal.criterion_agreement(gal.build_J(PairPQ(R, p, q))) is None


def test_module_automorphisms_fixing_one():
    assert gal.module_automorphisms_fixing_one(make_zmod(4))
    assert gal.module_automorphisms_fixing_one(make_zmod(6))


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_transform_is_an_action(data):
    R = make_zmod(8)
    P = PairPQ(R, 2, 3)
    s = data.draw(st.tuples(*[st.integers(0, 7)] * 6))
    u, u2 = data.draw(st.sampled_from(R.units)), data.draw(st.sampled_from(R.units))
    r, r2 = data.draw(st.integers(0, 7)), data.draw(st.integers(0, 7))
    twice = gal.transform(P, gal.transform(P, s, u, r), u2, r2)
    once = gal.transform(P, s, R.mul(u, u2), R.add(R.mul(u2, r), r2))
    assert twice == once


def test_transform_preserves_galois(z4_21, J4):
    A = gal.realize(z4_21, (1, 1))
    R = z4_21.R
    for u, r in itertools.product(R.units, R.elements):
        B = gal.GaloisAlgebra(z4_21, *gal.transform(z4_21, A.params, u, r))
        assert all(gal.validate_galois(J4, B).values())
        assert gal.isomorphisms(J4, A, B)


def test_classification_z4(z4_21):
    C = gal.classify_free_galois(z4_21)
    assert C.candidates == 4 ** 6
    assert len(C.classes) == 2 and C.ok
    assert not C.normal_form_violations


def test_classification_f4(f4):
    P = PairPQ(f4, f4.zero, f4.one)
    C = gal.classify_free_galois(P)
    assert len(C.classes) == 2 and C.ok


def test_trivial_class_always_present(z5_13):
    C = gal.classify_free_galois(z5_13)
    trivial = gal.realize(z5_13, (1, 0)).params
    assert any(trivial in cls for cls in C.classes)
    assert C.ok


def test_classification_cap():
    R = make_zmod(9)
    with pytest.raises(CapExceeded):
        gal.classify_free_galois(PairPQ(R, 1, 7))


@pytest.mark.parametrize("X, Y, expected", [((1, 0), (1, 1), (1, 1)), ((1, 1), (1, 1), (1, 2)),
                                            ((1, 1), (3, 0), (3, 1))])
def test_cotensor_examples(z4_21, J4, X, Y, expected):
    res = gal.cotensor(gal.realize(z4_21, X), gal.realize(z4_21, Y), J4)
    assert res.closed and res.routes_agree and res.conventions_agree and res.galois_ok
    assert len(res.elements) == 16
    assert gal.isomorphisms(J4, res.algebra, gal.realize(z4_21, expected))


def test_cotensor_all_pairs_f4(f4):
    P = PairPQ(f4, f4.zero, f4.one)
    Q = build_qu_f(P)
    J = gal.build_J(P)
    for X, Y in itertools.combinations_with_replacement(Q.objects, 2):
        assert gal.cotensor_matches_tensor(P, X, Y, Q, J)
