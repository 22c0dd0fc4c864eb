import pytest

from spl import hilbert
from spl.catalog import RING3, RING4, build
from spl.errors import NotMonomial, UnitIdeal, ZeroIdeal
from spl.idealops import Ideal, maximal_power, power
from spl.polyexpr import parse_poly
from spl.polyring import LEX, RingSpec
from spl.symbolic import symbolic_power


def P(s, R=RING4):
    return parse_poly(s, R)


def test_initial_ideal():
    R = RingSpec.of("x y")
    got = hilbert.initial_ideal(Ideal(R, [parse_poly("x+y", R)]))
    assert list(got.gens) == [parse_poly("x", R)]
    mono = Ideal(R, [parse_poly(s, R) for s in ("x^2", "x*y", "y^3")])
    assert hilbert.initial_ideal(mono) is mono
    assert hilbert.alpha(hilbert.initial_ideal(build("a3").ideal)) == 3


def test_numerators():
    assert hilbert.hilbert_numerator(Ideal(RING4, [])) == [1]
    assert hilbert.hilbert_numerator(Ideal.variables(RING4, "xy")) == [1, -2, 1]
    with pytest.raises(NotMonomial):
        hilbert.hilbert_numerator(Ideal(RING4, [P("x+y")]))


def test_numerator_I3():
    num = hilbert.hilbert_numerator(hilbert.initial_ideal(build("fermat_like:3").ideal))
    want = [0] * 13
    want[0], want[8], want[9], want[12] = 1, -6, 4, 1
    assert num == want


def test_dimension_multiplicity():
    assert hilbert.dimension(Ideal.variables(RING4, "xy")) == 2
    assert hilbert.multiplicity(build("fermat_like:3").ideal) == 42
    assert hilbert.multiplicity(build("a3").ideal) == 7
    assert hilbert.multiplicity(build("b3:2").ideal) == 13
    with pytest.raises(UnitIdeal):
        hilbert.dimension(Ideal(RING4, [P("1")]))


@pytest.mark.parametrize("cid", ["fermat_like:3", "fermat_like:4", "a3", "b3:2", "b3:3"])
def test_hilbert_coefficients_brute_force(cid):
    I = build(cid).ideal
    assert hilbert.hilbert_series(I).coefficients(12) == hilbert.standard_monomial_counts(I, 12)


@pytest.mark.parametrize("cid,m", [("a3", 2), ("a3", 3), ("fermat_like:3", 2)])
def test_hilbert_coefficients_symbolic(cid, m):
    I = symbolic_power(cid, m).ideal
    assert hilbert.hilbert_series(I).coefficients(12) == hilbert.standard_monomial_counts(I, 12)


def test_minimal_generators():
    assert set(hilbert.minimal_generators(Ideal(RING4, [P("x"), P("x^2"), P("y")]))) == {P("x"), P("y")}
    I3sq = power(build("fermat_like:3").ideal, 2)
    mg = hilbert.minimal_generators(I3sq)
    assert len(mg) == 21 and all(g.degree() == 16 for g in mg)
    mj = hilbert.minimal_generators(build("a3").ideal)
    assert len(mj) == 3 and all(g.degree() == 3 for g in mj)


def test_minimal_generators_drop_redundant_nonmonomial():
    R = RING3
    a, b = parse_poly("x^2 - y*z", R), parse_poly("y^2 + x*z", R)
    I = Ideal(R, [a, b, a * parse_poly("x", R) + b * parse_poly("y", R), parse_poly("z^3", R)])
    assert len(hilbert.minimal_generators(I)) == 3


def test_alpha_omega():
    assert hilbert.alpha(build("fermat_like:3").ideal) == 8
    J = build("a3").ideal
    assert hilbert.alpha(J) == hilbert.omega(J) == 3
    for k in (1, 2, 3):
        assert hilbert.alpha(maximal_power(RING4, k)) == hilbert.omega(maximal_power(RING4, k)) == k
    with pytest.raises(ZeroIdeal):
        hilbert.alpha(Ideal(RING4, []))


def test_alpha_order_independent():
    for cid in ("a3", "b3:2"):
        I = build(cid).ideal
        lex = hilbert.initial_ideal(I, LEX)
        grev = hilbert.initial_ideal(I)
        assert min(g.degree() for g in lex.gens) == min(g.degree() for g in grev.gens) == hilbert.alpha(I)


def test_graded_pieces():
    R = RingSpec.of("x y")
    xy = Ideal.variables(R, "xy")
    assert len(hilbert.graded_piece(xy, 1)) == 2
    J = build("a3").ideal
    assert len(hilbert.graded_piece(J, 2)) == 0
    # oracle: dim R_3 - h_{R/J}(3) = 10 - 7
    h3 = hilbert.hilbert_series(J).coefficients(3)[3]
    assert len(hilbert.graded_piece(J, 3)) == 10 - h3 == 3


def test_beta():
    assert hilbert.beta(build("a3").ideal) == 3
    assert hilbert.beta(symbolic_power("a3", 2).ideal) == 6
    assert hilbert.beta(build("b3:2").ideal) == 4


def test_format_tpoly():
    assert hilbert.format_tpoly([1, 0, -2, 1]) == "1 - 2*t^2 + t^3"
    assert hilbert.format_tpoly([1, -1]) == "1 - t"
