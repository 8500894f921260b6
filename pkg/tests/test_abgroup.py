import itertools
from collections import defaultdict

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import factorint

from catlab.abgroup import (GroupHom, NotAGroup, NotAHom, associativity_witness, check_exact_sequence,
                            group_from_closure, identity_hom, invariant_factors, is_isomorphic,
                            pullback, quotient, subgroup, trivial_group, zero_hom)
from catlab.qu import mu2_u2, square_map, unit_group
from catlab.ring import make_zmod


def cyclic_product(orders):
    """``Z/n1 x ... x Z/nk`` as tuples under componentwise addition."""
    els = list(itertools.product(*[range(n) for n in orders]))
    return group_from_closure(els, lambda a, b: tuple((x + y) % n for x, y, n in zip(a, b, orders)),
                              tuple(0 for _ in orders))


def expected_invariants(orders):
    """Invariant factors by merging prime-power parts, largest first per prime."""
    powers = defaultdict(list)
    for n in orders:
        for p, e in factorint(n).items():
            powers[p].append(p ** e)
    for p in powers:
        powers[p].sort(reverse=True)
    k = max((len(v) for v in powers.values()), default=0)
    out = []
    for i in range(k):
        d = 1
        for v in powers.values():
            if i < len(v):
                d *= v[i]
        out.append(d)
    return sorted(out)


def test_units_mod_8_are_klein():
    G = group_from_closure([1, 3, 5, 7], lambda a, b: a * b % 8, 1)
    assert invariant_factors(G) == [2, 2]


def test_trivial_group():
    assert invariant_factors(trivial_group()) == []


def test_closure_failure_is_reported():
    with pytest.raises(NotAGroup):
        group_from_closure([0, 1], lambda a, b: (a + b) % 3, 0)


def test_z21_of_z4():
    G = group_from_closure([0, 1], lambda r, s: (r + s + 2 * r * s) % 4, 0)
    assert invariant_factors(G) == [2]
    assert G.op(1, 1) == 0


def test_square_map_on_z5():
    sq = square_map(unit_group(make_zmod(5)), make_zmod(5))
    assert set(sq.kernel().elements) == {1, 4}
    assert set(sq.image().elements) == {1, 4}
    assert len(sq.cokernel()[0]) == 2


def test_identity_hom_has_trivial_kernel_and_cokernel():
    G = cyclic_product([6])
    f = identity_hom(G)
    assert f.kernel().is_trivial() and f.cokernel()[0].is_trivial()


@pytest.mark.parametrize("n, mu2, u2", [(8, [2, 2], [2, 2]), (5, [2], [2]), (1, [], []), (12, [2, 2], [2, 2])])
def test_mu2_u2(n, mu2, u2):
    m, u = mu2_u2(make_zmod(n))
    assert invariant_factors(m) == mu2 and invariant_factors(u) == u2


def test_units_of_z4():
    assert invariant_factors(unit_group(make_zmod(4))) == [2]


def test_bad_hom_is_rejected():
    G = cyclic_product([4])
    with pytest.raises(NotAHom):
        GroupHom(G, G, lambda a: ((a[0] * a[0]) % 4,))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 12), min_size=1, max_size=3).filter(lambda xs: np.prod(xs) <= 200))
def test_invariant_factors_match_prime_power_merge(orders):
    G = cyclic_product(orders)
    assert invariant_factors(G) == expected_invariants(orders)


@settings(max_examples=20, deadline=None)
@given(st.lists(st.integers(1, 8), min_size=1, max_size=3).filter(lambda xs: np.prod(xs) <= 100))
def test_first_isomorphism_theorem(orders):
    G = cyclic_product(orders)
    f = GroupHom(G, G, lambda a: tuple((2 * x) % n for x, n in zip(a, orders)))
    assert len(f.kernel()) * len(f.image()) == len(G)
    Q, proj = f.cokernel()
    assert len(Q) * len(f.image()) == len(G)
    assert proj.is_surjective()


def test_quotient_uses_least_representatives():
    G = cyclic_product([8])
    Q, proj = quotient(G, [(0,), (4,)])
    assert Q.elements == ((0,), (1,), (2,), (3,))
    assert proj((5,)) == (1,)


def test_subgroup_must_be_closed():
    G = cyclic_product([6])
    with pytest.raises(NotAGroup):
        subgroup(G, [(0,), (1,)])


def test_exact_sequence_identity():
    G = cyclic_product([3])
    rep = check_exact_sequence([identity_hom(G)], leading_zero=True, trailing_zero=True)
    assert rep.ok


def test_exactness_failure_has_witness():
    G = cyclic_product([4])
    double = GroupHom(G, G, lambda a: ((2 * a[0]) % 4,))
    rep = check_exact_sequence([zero_hom(G, G), double])
    assert not rep.ok
    assert rep.failures()[0][2] == (2,)


def test_noncomposable_maps_rejected():
    G, H = cyclic_product([2]), cyclic_product([2])
    with pytest.raises(ValueError):
        check_exact_sequence([identity_hom(G), identity_hom(H)])


def test_pullback_of_identities_is_diagonal():
    G = cyclic_product([5])
    Pb, p1, p2 = pullback(identity_hom(G), identity_hom(G))
    assert len(Pb) == 5 and all(x[0] == x[1] for x in Pb.elements)


def test_pullback_square_against_trivial_is_mu2():
    R = make_zmod(5)
    U = unit_group(R)
    one = subgroup(U, [1])
    inc = GroupHom(one, U, lambda x: x)
    Pb, _, _ = pullback(square_map(U, R), inc)
    assert invariant_factors(Pb) == [2]


def test_light_associativity_test_finds_fault():
    T = np.array([[(i + j) % 3 for j in range(3)] for i in range(3)])
    assert associativity_witness(T) is None
    T[1, 2] = 1
    assert associativity_witness(T) is not None


def test_is_isomorphic():
    assert is_isomorphic(cyclic_product([6]), cyclic_product([2, 3]))
    assert not is_isomorphic(cyclic_product([4]), cyclic_product([2, 2]))
