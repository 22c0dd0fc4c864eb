from fractions import Fraction

import pytest

from spl import groebner, symbolic, verify
from spl.catalog import build
from spl.errors import BadParameter, MissingAlpha
from spl.polyexpr import parse_poly
from spl.polyring import PolyMatrix


def test_parse_spec():
    s = verify.parse_spec("mpow:2:*:pow:a3:3")
    assert s.kind == "mpow" and s.k == 2 and s.inner.kind == "pow" and s.inner.exponent == 3
    assert s.alpha_lower() == 2 + 9
    assert verify.parse_spec("sym:fermat_like:3:4").config == "fermat_like:3"
    for bad in ("sym:a3", "pow:a3:0", "mpow:x:*:pow:a3:1", "mpow:1:pow:a3:1", "zzz", "sym:nope:2"):
        with pytest.raises(BadParameter):
            verify.parse_spec(bad)


def test_file_spec(tmp_path):
    f = tmp_path / "j.sid"
    f.write_text("ring x y z\ngen y*z*(y-z)\ngen z*x*(z-x)\ngen x*y*(x-y)\n")
    res = verify.check_containment("sym:a3:2", f"file:{f}")
    assert res.holds


def test_containment_examples():
    assert verify.check_containment("sym:a3:2", "pow:a3:1").holds
    res = verify.check_containment("sym:fermat_like:3:3", "pow:fermat_like:3:2")
    assert not res.holds and res.witness.degree() == 18
    assert res.witness_source.startswith("catalog witness")
    # soundness: the witness is in the left ideal and not in the right one
    assert symbolic.symbolic_membership(res.witness, "fermat_like:3", 3)
    G = verify.parse_spec("pow:fermat_like:3:2").ideal().gb()
    assert not groebner.normal_form(res.witness, G).is_zero()
    assert verify.check_containment("sym:a3:4", "mpow:2:*:pow:a3:2").holds


def test_left_generator_witness():
    # J^(2) contains elements of degree 6 but J^3 starts in degree 9
    res = verify.check_containment("sym:a3:2", "pow:a3:3")
    assert not res.holds and res.witness_source == "left generator"


def test_hh_small():
    rep = verify.hh_suite("a3", 2)
    vals = {r.name: r.value for r in rep.results}
    for name, v in vals.items():
        # the (2r-2) family fails for small r; α(J^(2)) = 6 < 8 already at r = 2
        assert v["holds"] == (not name.startswith("(2r-2)")), name
    assert any(k.startswith("(2r-2) r=2") for k in vals)
    rep = verify.hh_suite("fermat_like:3", 1)
    assert [r.value["holds"] for r in rep.results] == [True]


def test_hh_skip_marks_items():
    rep = verify.hh_suite("a3", 2, skip=[("2r", 2)])
    skipped = [r for r in rep.results if r.status == "skipped"]
    assert len(skipped) == 1 and "(2r) r=2" in skipped[0].name


def test_hh_degree_precondition():
    for n in (3, 4, 5):
        for r in (1, 2, 3):
            ok, lhs, rhs = verify.hh_degree_precondition(n, r)
            assert ok and lhs == 4 * r * n and rhs == r + r * (2 * n + 2)


def test_inequality_examples():
    reps = verify.inequality_suite("fermat_like:3", [3], alphas={3: 18})
    d = [r for r in reps if r.kind == "demailly_like"][0]
    assert d.left == 6 and d.right == Fraction(19, 4) and d.holds
    reps = verify.inequality_suite("a3", [1, 2], alphas={1: 3, 2: 6})
    by_m = {r.m: r for r in reps if r.kind == "demailly_like"}
    assert by_m[1].right == 2 and by_m[2].right == Fraction(7, 3)
    assert all(r.holds for r in reps)
    with pytest.raises(MissingAlpha):
        verify.inequality_suite("a3", [3], alphas={}, compute=False)


def test_inequality_uses_interval_upper_end():
    iv = symbolic.AlphaResult("fermat_like:3", 2, 14, 16, "sandwich")
    reps = verify.inequality_suite("fermat_like:3", [2], alphas={2: iv})
    assert reps[-1].right == Fraction(17, 3)


def test_resolution_n3():
    rep = verify.resolution_check_fermat_like(3)
    assert rep.ok and rep.get("implied reg(I_n)").value == 11
    with pytest.raises(BadParameter):
        verify.resolution_check_fermat_like(2)


def test_resolution_sign_flip_mutation():
    phi2 = verify.phi2_matrix(3)
    rows = [[phi2[i, j] for j in range(5)] for i in range(6)]
    rows[0][0] = -rows[0][0]
    bad = PolyMatrix.from_rows(phi2.ring, rows)
    rep = verify.resolution_check_fermat_like(3, phi2=bad)
    assert rep.get("phi1*phi2 == 0").status == "failed" and not rep.ok


def test_literal_generator_order_is_not_a_syzygy_row():
    N = build("fermat_like:3")
    phi2 = verify.phi2_matrix(3)
    prod = [sum((N.gens[i] * phi2[i, j] for i in range(6)), parse_poly("0", N.ring)) for j in range(5)]
    assert not all(p.is_zero() for p in prod)


def test_bn_power_numerators():
    assert verify.bn_power_numerator(1, 2) == [1, 0, 0, 0, 0, 0, -6, 3, 3, -1]
    assert [sum(r for r, _ in layer) for layer in verify.bn_power_betti(1, 3)] == [10, 12, 3]
    rep = verify.resolution_check_bn_power(1, 3)
    assert rep.ok and rep.get("implied reg").value == 3 * 3 + 1


def test_bn_power_r1_rejected():
    with pytest.raises(BadParameter):
        verify.resolution_check_bn_power(1, 1)


def test_reg_table():
    rep = verify.reg_inequality_table_I3(6, cross_check=(1, 2))
    assert rep.ok
    assert rep.get("r=2: alpha(I3^(4)) > reg bound").value == "26 > 25"
    assert rep.get("r=5: alpha(I3^(8)) > reg bound").value == "52 > 49"
    assert verify.alpha_I3_formula(10) == 62 and 62 >= verify.reg_I3_bound(6) == 57
    assert rep.get("reg(I3^3) bound").status == "recorded-from-paper"


def test_grid_small():
    rep = verify.resurgence_grid("a3", [(3, 2), (2, 1), (1, 2)])
    assert rep.get("holding pairs").value == [[3, 2], [2, 1]]
    assert rep.get("certified rho lower bound").value == "1/2"


def test_report_csv_and_json_shape():
    rep = verify.identity_checks()
    js = rep.to_json()
    assert set(js) >= {"task", "tool_version", "inputs", "results", "timings_ms"}
    lines = rep.to_csv().strip().split("\n")
    assert lines[0] == "task,name,status,value,citation" and len(lines) == len(rep.results) + 1
