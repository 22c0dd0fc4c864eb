import pytest
from fractions import Fraction

from spl.catalog import RING3, RING4, build
from spl.errors import EmptyInput, ExponentOverflow, LexError, MissingRingHeader, ParseError, UnknownVariable
from spl.polyexpr import dumps_ideal, load_ideal_file, loads_ideal, parse_poly, print_poly
from spl.polyring import RingSpec

from oracles import sample_grid, sympy_expand, to_sympy


def test_cancellation_gives_zero():
    R = RingSpec.of("x y")
    p = parse_poly("x - x", R)
    assert p.is_zero()
    assert print_poly(p) == "0"


def test_product_expansion_matches_sympy():
    src = "(x^3-y^3)*(z^3-w^3)*x*y"
    p = parse_poly(src, RING4)
    assert p.nterms == 4 and p.degree() == 8
    assert to_sympy(p) == sympy_expand(src, RING4.variables)
    # grevlex: the w^3 terms come last
    assert print_poly(p) == "x^4*y*z^3 - x*y^4*z^3 - x^4*y*w^3 + x*y^4*w^3"


def test_sort_by_order():
    R = RingSpec.of("x y")
    assert print_poly(parse_poly("y + x", R)) == "x + y"


@pytest.mark.parametrize("src,exc", [
    ("x**2", LexError), ("", EmptyInput), ("   ", EmptyInput), ("q", UnknownVariable),
    ("x^2147483648", ExponentOverflow), ("2x", ParseError), ("x^2^3", ParseError),
    ("1/0", ParseError), ("(x", ParseError), ("x+", ParseError), ("x $ y", LexError),
])
def test_parse_errors(src, exc):
    with pytest.raises(exc):
        parse_poly(src, RING4)


def test_unclosed_paren_message():
    with pytest.raises(ParseError, match="end of input"):
        parse_poly("(x+y", RING4)


def test_rationals_reduced():
    p = parse_poly("3/6*x - 2/4*y", RING4)
    assert p.coeff((1, 0, 0, 0)) == Fraction(1, 2)
    assert print_poly(p) == "1/2*x - 1/2*y"


def test_max_exponent_accepted():
    p = parse_poly("x^2147483647", RingSpec.of("x"))
    assert p.degree() == 2 ** 31 - 1


@pytest.mark.parametrize("cid", ["fermat_like:3", "fermat_like:4", "a3", "b3:2", "b3:3"])
def test_catalog_round_trip(cid):
    N = build(cid)
    for g in N.gens:
        assert parse_poly(print_poly(g), N.ring) == g


def test_expansion_against_grid_evaluation():
    # identity testing on a (deg+1)^nvars grid
    src = "(x-2*y)^3*(1/3*y+x) - x*(y-1)^2"
    R = RingSpec.of("x y")
    p = parse_poly(src, R)
    ref = sympy_expand(src, R.variables)
    import sympy

    xs = sympy.symbols("x y")
    for pt in sample_grid(2, 4):
        assert p.evaluate(pt) == ref.subs(dict(zip(xs, pt)))


def test_sid_files(tmp_path):
    f = tmp_path / "a.sid"
    f.write_text("# comment\nring x y\n\ngen x^2\n")
    ring, gens = load_ideal_file(f)
    assert ring.variables == ("x", "y")
    assert [print_poly(g) for g in gens] == ["x^2"]


def test_sid_I3_has_six_octics(tmp_path):
    N = build("fermat_like:3")
    f = tmp_path / "i3.sid"
    f.write_text(dumps_ideal(N.ring, N.gens))
    ring, gens = load_ideal_file(f)
    assert len(gens) == 6 and all(g.degree() == 8 and g.is_homogeneous() for g in gens)
    assert list(gens) == list(N.gens)


def test_sid_unknown_variable_reports_line():
    with pytest.raises(UnknownVariable) as ei:
        loads_ideal("ring x y\ngen x\ngen q\n")
    assert ei.value.line == 3


def test_sid_missing_header():
    with pytest.raises(MissingRingHeader):
        loads_ideal("gen x\n")
    with pytest.raises(MissingRingHeader):
        loads_ideal("# nothing\n")


def test_sid_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_ideal_file(tmp_path / "absent.sid")


def test_ring3_parse():
    p = parse_poly("y*z*(y-z)", RING3)
    assert print_poly(p) == "y^2*z - y*z^2"
