
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catlab.cli import parse_ring_spec
from catlab.ring import (FiniteRing, RingAxiomError, admissible_pairs, is_local, make_poly_quotient,
                         make_product, make_zmod, quotient_by_principal, unit_analysis)


@pytest.mark.parametrize("n, units", [(1, [0]), (4, [1, 3]), (6, [1, 5]), (8, [1, 3, 5, 7]), (12, [1, 5, 7, 11])])
def test_zmod_units(n, units):
    assert list(make_zmod(n).units) == units


def test_zero_ring():
    R = make_zmod(1)
    assert R.is_zero_ring and R.zero == R.one
    assert not is_local(R)


def test_product_sizes():
    R = make_product([make_zmod(4), make_zmod(3)])
    assert R.n == 12 and len(R.units) == 4
    assert R.spec == "Z/4 x Z/3"
    # first factor is the most significant digit
    assert R.label(R.from_int(5)) == "(1,2)"


def test_product_with_zero_ring_is_isomorphic():
    R = make_zmod(6)
    S = make_product([R, make_zmod(1)])
    assert S.n == R.n
    assert (S.add_table == R.add_table).all() and (S.mul_table == R.mul_table).all()


def test_boolean_square_idempotents():
    R = make_product([make_zmod(2), make_zmod(2)])
    assert all(R.mul(r, r) == r for r in R.elements)


def test_f4_is_a_field(f4):
    assert f4.n == 4 and len(f4.units) == 3
    x = f4.element("x")
    assert f4.mul(x, x) == f4.element("1+x")


def test_z4_dual_numbers():
    R = parse_ring_spec("Z/4[x]/(x^2)")
    assert R.n == 16
    expected = {R.element(lab) for lab in R.labels if lab.split("+")[0] in ("1", "3")}
    assert set(R.units) == expected


def test_degree_one_quotient_is_the_base_ring():
    R = make_zmod(5)
    S = make_poly_quotient(R, [0, 1])
    assert (S.mul_table == R.mul_table).all()


def test_poly_quotient_rejects_non_monic():
    with pytest.raises(ValueError):
        make_poly_quotient(make_zmod(4), [1, 0, 2])


@pytest.mark.parametrize("n, p, size", [(4, 2, 2), (4, 0, 4), (8, 4, 4), (12, 5, 1)])
def test_principal_quotient_sizes(n, p, size):
    Q = quotient_by_principal(make_zmod(n), p)
    assert Q.quotient.n == size
    for x in range(n):
        assert Q.project(Q.lift[Q.project(x)]) == Q.project(x)


def test_principal_quotient_uses_least_representatives():
    Q = quotient_by_principal(make_zmod(8), 4)
    assert Q.lift == (0, 1, 2, 3)


@pytest.mark.parametrize("spec, radical, zero_divisors", [
    ("Z/8", {0, 2, 4, 6}, {2, 4, 6}),
    ("Z/6", {0}, {2, 3, 4}),
    ("Z/2[x]/(x^2+x+1)", {0}, set()),
])
def test_unit_analysis(spec, radical, zero_divisors):
    ua = unit_analysis(parse_ring_spec(spec))
    assert set(ua.radical) == radical
    assert set(ua.zero_divisors) == zero_divisors


@pytest.mark.parametrize("spec, local", [("Z/8", True), ("Z/6", False), ("Z/9", True),
                                         ("Z/2[x]/(x^2)", True), ("Z/2 x Z/4", False)])
def test_locality(spec, local):
    assert is_local(parse_ring_spec(spec)) is local


def test_admissible_pairs_z4(z4):
    assert admissible_pairs(z4) == [(1, 2), (2, 1), (2, 3), (3, 2)]


def test_admissible_pairs_z5():
    assert admissible_pairs(make_zmod(5)) == [(1, 3), (2, 4), (3, 1), (4, 2)]


def test_admissible_pairs_z2():
    # pq = 0 is needed and (1, 1) fails it, so only three of the four pairs qualify
    assert admissible_pairs(make_zmod(2)) == [(0, 0), (0, 1), (1, 0)]


def test_validation_catches_bad_distributivity():
    R = make_zmod(3)
    mul = R.mul_table.copy()
    mul[2, 2] = 2
    with pytest.raises(RingAxiomError):
        FiniteRing(R.add_table, mul, 0, 1, R.labels, "broken")


def test_from_int_negative(z4):
    assert z4.from_int(-2) == 2 and z4.from_int(-1) == 3


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["Z/6", "Z/9", "Z/2[x]/(x^2+x+1)", "Z/4[x]/(x^2)", "Z/2 x Z/4"]),
       st.data())
def test_ring_laws_pointwise(spec, data):
    R = parse_ring_spec(spec)
    a, b, c = (data.draw(st.integers(0, R.n - 1)) for _ in range(3))
    assert R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c))
    assert R.add(a, R.neg(a)) == R.zero
    if R.is_unit(a):
        assert R.mul(a, R.inv(a)) == R.one


def test_nonunits_of_finite_ring_are_zero_divisors():
    for spec in ["Z/12", "Z/16", "Z/4 x Z/3", "Z/4[x]/(x^2)"]:
        R = parse_ring_spec(spec)
        ua = unit_analysis(R)
        assert set(R.elements) == set(ua.units) | set(ua.zero_divisors) | {R.zero}
