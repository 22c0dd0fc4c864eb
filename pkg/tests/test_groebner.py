import pytest

from spl import groebner
from spl.catalog import RING3, RING4, build, special_forms
from spl.errors import BadOrder, BudgetExceeded, OrderMismatch, RingMismatch
from spl.idealops import Ideal, equal_as_ideals, power
from spl.polyexpr import parse_poly
from spl.polyring import GREVLEX, LEX, MonomialOrder, RingSpec

from oracles import monic_set, sympy_reduced_gb


def P(s, R=RING4):
    return parse_poly(s, R)


def test_normal_form_small():
    G = groebner.buchberger([P("x")])
    assert groebner.normal_form(P("x^2*y"), G).is_zero()
    assert groebner.normal_form(P("y"), G) == P("y")


def test_F3_in_K3_cubed():
    N = build("fermat_like:3")
    G = power(N.ci_component, 3).gb()
    assert groebner.normal_form(special_forms("fermat_like:3")["F"], G).is_zero()


def test_buchberger_small():
    G = groebner.buchberger([P("x"), P("y")])
    assert set(G.basis) == {P("x"), P("y")}
    R = RingSpec.of("x y")
    G = groebner.buchberger([parse_poly("x^2 - y", R), parse_poly("y", R)])
    assert set(G.basis) == {parse_poly("x^2", R), parse_poly("y", R)}


def test_gb_I3_min_degree():
    G = build("fermat_like:3").ideal.gb()
    assert min(g.degree() for g in G.basis) == 8
    assert groebner.check_groebner(G) and groebner.is_reduced(G)


def test_membership_examples():
    assert groebner.is_member(P("x*y"), [P("x")])
    F = special_forms("fermat_like:3")
    assert groebner.is_member(F["h"], [F["f"], F["g"]])
    K = build("a3").ci_component
    assert groebner.is_member(parse_poly("y*z*(y-z)", RING3), list(K.gens))
    assert not groebner.is_member(P("y"), [P("x")])


def test_eliminate():
    R = RingSpec.of("t x y")
    t, x, y = (parse_poly(s, R) for s in "txy")
    assert groebner.eliminate([t * x, (1 - t) * y], 1) == [x * y]
    assert groebner.eliminate([t - x], 1) == []
    with pytest.raises(BadOrder):
        groebner.eliminate([t * x], 1, order=GREVLEX)


def test_intersection_by_hand():
    R = RingSpec.of("t x y z", MonomialOrder("block", 1))
    t, x, y, z = (parse_poly(s, R) for s in "txyz")
    out = groebner.eliminate([t * x, t * y, (1 - t) * y, (1 - t) * z], 1)
    R3 = RingSpec.of("x y z")
    got = Ideal(R3, [g.drop_leading(R3, 1) for g in out])
    want = Ideal(R3, [parse_poly("y", R3), parse_poly("x*z", R3)])
    assert equal_as_ideals(got, want)


@pytest.mark.parametrize("gens", [
    ["x^2*y - z^3", "x*y^2 - w^3", "x*z - y*w"],
    ["x^3 - y*z*w", "y^3 - x*z*w", "z^2 - w^2 + x*y"],
    ["(y-z)*(y+z-x)", "(x-y)*(x+y-z)"],
])
def test_against_sympy(gens):
    polys = [P(g) for g in gens]
    G = groebner.buchberger(polys)
    assert monic_set(G.basis) == sympy_reduced_gb(polys)
    assert groebner.check_groebner(G)


def test_against_sympy_lex():
    R = RingSpec.of("x y z", LEX)
    polys = [parse_poly(s, R) for s in ["x^2 + y*z - 1", "x*y - z^2", "y^2 - x*z"]]
    G = groebner.buchberger(polys, LEX)
    assert monic_set(G.basis, "lex") == sympy_reduced_gb(polys, "lex")


def test_permutation_invariance():
    polys = list(build("a3").gens)
    a = groebner.buchberger(polys).basis
    b = groebner.buchberger(polys[::-1]).basis
    assert a == b


def test_homogeneous_basis_homogeneous():
    G = build("b3:2").ideal.gb()
    assert all(g.is_homogeneous() for g in G.basis)


def test_normalization_positive_primitive():
    G = groebner.buchberger([P("2*x - 4*y"), P("6*y*z")])
    for g in G.basis:
        assert g.content() == 1 and g.leading_coefficient(G.order) > 0


def test_nf_errors():
    G = groebner.buchberger([P("x")])
    with pytest.raises(RingMismatch):
        groebner.normal_form(parse_poly("x", RING3), G)
    with pytest.raises(OrderMismatch):
        groebner.normal_form(P("x"), G, order=LEX)


def test_degree_budget():
    with pytest.raises(BudgetExceeded):
        groebner.buchberger([P("x^3 - y^2*z"), P("x*y*w - z^3"), P("w^4 - x*y^3")],
                            budget=groebner.Budget(max_degree=4))


def test_hash_is_64_hex():
    key = groebner.ideal_hash(RING4, [P("x"), P("y")], GREVLEX)
    assert len(key) == 64 and int(key, 16) >= 0
