import random

import pytest

from spl.catalog import RING4, build, special_forms
from spl.errors import NotSquare, RingMismatch, ShapeMismatch
from spl.polyexpr import parse_poly
from spl.polyring import (GREVLEX, LEX, MonomialOrder, PolyMatrix, Polynomial, RingSpec, degree, det,
                          det_bruteforce, is_homogeneous, mat_mul)
from spl.verify import phi1_row, phi2_matrix


def P(s, R=RING4):
    return parse_poly(s, R)


def test_basic_arithmetic():
    assert P("x-y") * P("x+y") == P("x^2-y^2")
    assert special_forms("fermat_like:3")["f"] ** 0 == 1


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        P("x") + parse_poly("x", RingSpec.of("x y"))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_h_is_g_minus_f(n):
    F = special_forms(f"fermat_like:{n}")
    assert F["h"] == F["g"] - F["f"]


def test_degrees():
    F = special_forms("fermat_like:3")["F"]
    assert degree(F) == 18
    assert degree(Polynomial.zero(RING4)) == float("-inf")
    g1 = build("fermat_like:3").gens[0]
    assert is_homogeneous(g1) and degree(g1) == 8
    assert not is_homogeneous(P("x^2 + y"))


def test_det_small():
    R = RING4
    I2 = PolyMatrix.identity(R, 2)
    assert det(I2) == 1
    M = PolyMatrix.from_rows(R, [[P("x"), P("y")], [P("z"), P("w")]])
    assert det(M) == P("x*w - y*z")
    with pytest.raises(NotSquare):
        det(PolyMatrix.from_rows(R, [[P("x"), P("y")]]))


def test_phi2_minor_row1_is_2g3():
    N = build("fermat_like:3")
    assert det(phi2_matrix(3).delete_row(0)) == N.gens[2] * 2


@pytest.mark.parametrize("n", [3, 4])
def test_phi1_phi2_is_zero(n):
    R = RING4
    row = PolyMatrix.from_rows(R, [phi1_row(n)])
    prod = mat_mul(row, phi2_matrix(n))
    assert (prod.rows, prod.cols) == (1, 5) and prod.is_zero()


def test_mat_mul_identity_and_shape():
    R = RING4
    M = PolyMatrix.from_rows(R, [[P("x"), P("y"), P("1")], [P("z"), P("w^2"), P("0")]])
    assert mat_mul(PolyMatrix.identity(R, 2), M) == M
    with pytest.raises(ShapeMismatch):
        mat_mul(M, M)


def _rand_poly(rng, R, maxdeg=2):
    terms = {}
    for _ in range(rng.randint(0, 3)):
        d = rng.randint(0, maxdeg)
        e = [0] * R.nvars
        for _ in range(d):
            e[rng.randrange(R.nvars)] += 1
        terms[tuple(e)] = rng.randint(-3, 3)
    return Polynomial(R, terms)


@pytest.mark.parametrize("size", [1, 2, 3, 4])
def test_det_matches_permutation_sum(size):
    rng = random.Random(size)
    R = RingSpec.of("x y z")
    for _ in range(6):
        M = PolyMatrix.from_rows(R, [[_rand_poly(rng, R) for _ in range(size)] for _ in range(size)])
        assert det(M) == det_bruteforce(M)


def test_order_basics():
    x2, xy, y3 = (2, 0), (1, 1), (0, 3)
    assert LEX.key(x2) > LEX.key(xy) > LEX.key(y3)
    assert GREVLEX.key(y3) > GREVLEX.key(x2)
    B = MonomialOrder("block", 1)
    # anything with t beats anything without it
    assert B.key((1, 0, 0)) > B.key((0, 5, 5))
    assert MonomialOrder.from_name("block2") == MonomialOrder("block", 2)
    with pytest.raises(ValueError):
        MonomialOrder("weird")


def test_bad_ring():
    with pytest.raises(ValueError):
        RingSpec.of("x x")
    with pytest.raises(ValueError):
        RingSpec.of("")
    with pytest.raises(ValueError):
        RingSpec.of("1x")
