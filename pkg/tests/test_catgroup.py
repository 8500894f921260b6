import pytest

from catlab.abgroup import GroupHom, group_from_closure, invariant_factors
from catlab.catgroup import (CatGroup, MonFunctor, Mor, NatToTrivial, catgroup_from_hom, compose_functors,
                             functor_from_square, functor_props, identity_functor,
                             induced_to_two_kernel, six_term, trivial_catgroup, two_kernel,
                             two_kernel_of_square, validate_catgroup, validate_functor)
from catlab.qu import PairPQ, build_G, build_qu_f, build_triple, gamma_check, square_map, unit_group
from catlab.ring import make_zmod


def one_object(name, tensor_data):
    """One object, automorphisms Z/4 under addition, tensor of arrows given by ``tensor_data``."""
    return CatGroup(name, [0], 0, lambda y: [Mor(0, 0, g) for g in range(4)],
                    compose=lambda g, f: Mor(0, 0, (f.data + g.data) % 4),
                    identity=lambda x: Mor(0, 0, 0),
                    inverse=lambda f: Mor(0, 0, -f.data % 4),
                    tensor=lambda x, y: 0,
                    tensor_mor=lambda f, g: Mor(0, 0, tensor_data(f.data, g.data)))


def test_one_object_catgroup_is_valid():
    assert validate_catgroup(one_object("Z/4", lambda a, b: (a + b) % 4), budget=None).ok


def test_broken_interchange_is_reported():
    # transport of + along the swap 1 <-> 2: unital, commutative, associative, yet not
    # a homomorphism for composition
    sigma = [0, 2, 1, 3]
    rep = validate_catgroup(one_object("bad", lambda a, b: sigma[(sigma[a] + sigma[b]) % 4]), budget=None)
    assert not rep.ok
    assert rep.law == "interchange law"
    assert len(rep.witness) == 4


def test_trivial_catgroup():
    T = trivial_catgroup()
    assert validate_catgroup(T).ok
    assert T.pi0().is_trivial() and T.pi1().is_trivial()


def test_qu_z4_valid_with_eight_objects(z4_21):
    Q = build_qu_f(z4_21)
    rep = validate_catgroup(Q, budget=None)
    assert rep.ok and rep.exhaustive
    assert len(Q.objects) == 8


def test_qu_z4_components(z4_21):
    Q = build_qu_f(z4_21)
    comp = Q.components()
    unit_class = {X for X in Q.objects if comp[X] == comp[(1, 0)]}
    assert unit_class == {(1, 0), (3, 0), (1, 2), (3, 2)}
    assert comp[(1, 1)] != comp[(1, 0)]
    assert invariant_factors(Q.pi0()) == [2]
    assert {f.data for f in Q.pi1().elements} == {(1, 0), (3, 1)}


def test_pi_of_G():
    G5 = build_G(make_zmod(5)).cat
    assert invariant_factors(G5.pi0()) == [2] and invariant_factors(G5.pi1()) == [2]
    assert invariant_factors(build_G(make_zmod(8)).cat.pi1()) == [2, 2]
    assert sorted(f.data for f in build_G(make_zmod(12)).cat.pi1().elements) == [1, 5, 7, 11]


def test_G_of_zero_ring_is_trivial():
    G = build_G(make_zmod(1)).cat
    assert len(G.objects) == 1 and len(G.morphisms()) == 1


def test_catgroup_of_identity_has_trivial_invariants():
    U = unit_group(make_zmod(7))
    C = catgroup_from_hom(GroupHom(U, U, lambda x: x))
    assert validate_catgroup(C).ok
    assert C.pi0().is_trivial() and C.pi1().is_trivial()


def test_catgroup_of_square_on_z5():
    R = make_zmod(5)
    C = catgroup_from_hom(square_map(unit_group(R), R))
    assert invariant_factors(C.pi0()) == [2] == invariant_factors(C.pi1())


def test_identity_functor():
    C = build_G(make_zmod(5)).cat
    F = identity_functor(C)
    assert validate_functor(F).ok
    props = functor_props(F)
    assert props.equivalence and props.routes_agree
    K, _ = two_kernel(F)
    assert K.pi0().is_trivial() and K.pi1().is_trivial()
    st = six_term(F)
    assert st.report.ok


def test_two_kernel_of_beta_z4(z4_21):
    T = build_triple(z4_21)
    K, _ = two_kernel(T.beta)
    assert validate_catgroup(K).ok
    assert K.pi0().is_trivial()
    assert invariant_factors(K.pi1()) == [2]


def test_six_term_of_beta_z4(z4_21):
    st = six_term(build_triple(z4_21).beta)
    assert st.report.ok
    assert [invariant_factors(g) for g in st.groups] == [[2], [2], [], [], [2], [2]]
    assert st.maps[4].is_isomorphism()


def test_G_to_zero_recovers_catgroup_of_hom():
    R = make_zmod(8)
    U = unit_group(R)
    alpha = GroupHom(U, U, lambda x: R.mul(x, R.mul(x, x)), name="cube")
    Ga = catgroup_from_hom(alpha)
    Z = trivial_catgroup("0")
    F = to_trivial(Ga, Z)
    K, _ = two_kernel(F)
    # K is G_alpha again: components modulo alpha's image, automorphisms its kernel
    assert len(K.pi0()) == len(alpha.cokernel()[0])
    assert len(K.pi1()) == len(alpha.kernel())
    assert six_term(F).report.ok


def to_trivial(C, Z):
    star = Z.identity(Z.unit)
    return MonFunctor(C, Z, lambda x: Z.unit, lambda f: star, name="to 0")


def test_two_kernel_of_square_matches_pullback_model(z4_21):
    T = build_triple(z4_21)
    cmp = two_kernel_of_square(T.G.sq, T.gpq.Sq, T.proj_p, T.proj_p2, F=T.beta)
    assert cmp.ok
    assert cmp.pb.elements == ((1, 1),)


def test_square_must_commute():
    R = make_zmod(5)
    U = unit_group(R)
    sq = square_map(U, R)
    ident = GroupHom(U, U, lambda x: x)
    Ga, Gb = catgroup_from_hom(sq), catgroup_from_hom(ident)
    with pytest.raises(ValueError):
        functor_from_square(Ga, Gb, ident, ident, sq, ident)


def test_gamma_z4_faithful_not_full(z4_21):
    rep = gamma_check(z4_21)
    assert rep.functor_ok and rep.props.essentially_surjective and rep.props.faithful
    assert not rep.props.full
    x, y, extra = rep.props.witnesses["full"]
    Q = rep.gamma.source
    assert extra is not None and Q.hom(x, y) == []
    assert rep.ok
    assert rep.kernel.pi0().is_trivial()


def test_gamma_z5_equivalence(z5_13):
    rep = gamma_check(z5_13)
    assert rep.props.equivalence and rep.props.equivalence_by_pi and rep.ok


def test_gamma_z8_essentially_surjective():
    R = make_zmod(8)
    assert gamma_check(PairPQ(R, 2, 3)).essentially_surjective


def test_kappa_must_be_natural(z4_21):
    T = build_triple(z4_21)
    R = z4_21.R
    bad = NatToTrivial(T.beta_alpha, lambda X: Mor(T.beta_alpha.fobj(X), T.gpq.Up2.identity, R.one if X[1] else 0))
    with pytest.raises(ValueError):
        induced_to_two_kernel(T.alpha, T.beta, bad)


def test_identity_kappa_into_contractible_kernel():
    U = unit_group(make_zmod(5))
    Gi = catgroup_from_hom(GroupHom(U, U, lambda x: x))
    idF = identity_functor(Gi)
    # in G_id the arrow x -> 1 is labelled by x itself
    kap = NatToTrivial(compose_functors(idF, idF), lambda x: Mor(x, Gi.unit, x))
    gamma = induced_to_two_kernel(idF, idF, kap)
    assert validate_functor(gamma).ok
    K = gamma.target
    assert K.pi0().is_trivial() and K.pi1().is_trivial()
    assert functor_props(gamma).equivalence


def test_sampled_validation_records_coverage():
    R = make_zmod(9)
    Q = build_qu_f(PairPQ(R, 1, 7))
    rep = validate_catgroup(Q, budget=50)
    assert rep.ok
    sampled = [c for c in rep.coverage if c.mode == "sampled"]
    assert sampled and all(c.checked == 50 < c.total for c in sampled)
