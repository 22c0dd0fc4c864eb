"""Verification suites: containments, Harbourne-Huneke checks, inequalities,
free-resolution checks, the resurgence grid and table reproduction."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from . import groebner, hilbert, symbolic
from .catalog import NamedIdeal, build, parse_config_id, witness_catalog
from .errors import BadParameter, BudgetExceeded, MissingAlpha, NoWitnessKnown
from .idealops import Ideal, maximal_power, power, product
from .polyexpr import load_ideal_file, parse_poly
from .polyring import PolyMatrix, Polynomial, det
from .report import Report

# -- ideal specs ----------------------------------------------------------------


@dataclass
class IdealSpec:
    """A resolved ``sym:`` / ``pow:`` / ``mpow:`` / ``file:`` ideal description."""

    text: str
    kind: str
    config: Optional[str] = None
    exponent: int = 0
    k: int = 0
    inner: Optional["IdealSpec"] = None
    path: Optional[str] = None

    def ideal(self, budget: Optional[groebner.Budget] = None) -> Ideal:
        if self.kind == "sym":
            return symbolic.symbolic_power(self.config, self.exponent, budget=budget).ideal
        if self.kind == "pow":
            return power(build(self.config).ideal, self.exponent)
        if self.kind == "mpow":
            inner = self.inner.ideal(budget)
            if self.k == 0:
                return inner
            return product(maximal_power(inner.ring, self.k), inner)
        ring, gens = load_ideal_file(self.path)
        return Ideal(ring, gens, name=self.path)

    def ring(self):
        if self.kind in ("sym", "pow"):
            return build(self.config).ring
        if self.kind == "mpow":
            return self.inner.ring()
        return load_ideal_file(self.path)[0]

    def alpha_lower(self) -> Optional[int]:
        """A cheap lower bound for α, used to reject low-degree generators early."""
        if self.kind == "pow":
            N = build(self.config)
            return self.exponent * min(g.degree() for g in N.gens)
        if self.kind == "mpow":
            a = self.inner.alpha_lower()
            return None if a is None else a + self.k
        return None

    def __str__(self):
        return self.text


GRAMMAR = "sym:<config>:<m> | pow:<config>:<r> | mpow:<k>:*:<spec> | file:<path>"


def parse_spec(text: str) -> IdealSpec:
    if text.startswith("file:"):
        return IdealSpec(text, "file", path=text[5:])
    if text.startswith("mpow:"):
        head, sep, rest = text[5:].partition(":*:")
        if not sep:
            raise BadParameter(f"bad spec {text!r}; expected {GRAMMAR}")
        try:
            k = int(head)
        except ValueError:
            raise BadParameter(f"bad spec {text!r}; expected {GRAMMAR}") from None
        if k < 0:
            raise BadParameter("mpow exponent must be >= 0")
        return IdealSpec(text, "mpow", k=k, inner=parse_spec(rest))
    for kind in ("sym", "pow"):
        if text.startswith(kind + ":"):
            cfg, _, e = text[len(kind) + 1:].rpartition(":")
            try:
                e = int(e)
            except ValueError:
                raise BadParameter(f"bad spec {text!r}; expected {GRAMMAR}") from None
            if e < 1:
                raise BadParameter("exponent must be >= 1")
            parse_config_id(cfg)
            return IdealSpec(text, kind, config=cfg, exponent=e)
    raise BadParameter(f"bad spec {text!r}; expected {GRAMMAR}")


def _spec(s) -> IdealSpec:
    return s if isinstance(s, IdealSpec) else parse_spec(s)


# -- containment ------------------------------------------------------------------


@dataclass
class ContainmentResult:
    left: str
    right: str
    holds: bool
    witness: Optional[Polynomial] = None
    witness_source: str = ""
    checked: int = 0
    timings: Dict[str, float] = field(default_factory=dict)

    def witness_digest(self) -> str:
        if self.witness is None:
            return ""
        import hashlib

        s = str(self.witness)
        return f"deg {self.witness.degree()}, {self.witness.nterms} terms, sha256 {hashlib.sha256(s.encode()).hexdigest()[:16]}"

    def to_json(self):
        return {"left": self.left, "right": self.right, "holds": self.holds,
                "witness": str(self.witness) if self.witness is not None else None,
                "witness_source": self.witness_source, "witness_digest": self.witness_digest(),
                "checked": self.checked, "timings_ms": {k: round(v * 1000, 3) for k, v in self.timings.items()}}


def check_containment(left, right, budget: Optional[groebner.Budget] = None) -> ContainmentResult:
    """left ⊆ right iff every generator of left reduces to zero modulo a Gröbner basis of right.

    For a symbolic-power left side, catalog witnesses (verified members of the
    left ideal) are tried first so that failures come with a named witness.
    """
    L, Rs = _spec(left), _spec(right)
    t0 = time.monotonic()
    timings = {}
    with groebner.budget_scope(budget or groebner.Budget()):
        right_ideal = Rs.ideal()
        G = right_ideal.gb()
        timings["right_gb"] = time.monotonic() - t0
        a_right = min(g.degree() for g in G.basis)
        res = ContainmentResult(str(L), str(Rs), True, timings=timings)
        if L.kind == "sym":
            try:
                entries = witness_catalog(L.config, L.exponent)
            except NoWitnessKnown:
                entries = []
            for w in entries:
                f = w.polynomial
                if symbolic.symbolic_membership(f, L.config, L.exponent) and not groebner.reduces_to_zero(f, G):
                    res.holds, res.witness, res.witness_source = False, f, f"catalog witness {w.label}"
                    timings["total"] = time.monotonic() - t0
                    return res
        t1 = time.monotonic()
        left_ideal = L.ideal()
        timings["left"] = time.monotonic() - t1
        for g in sorted(left_ideal.gens, key=lambda p: p.degree()):
            res.checked += 1
            if g.degree() < a_right or not groebner.reduces_to_zero(g, G):
                res.holds, res.witness, res.witness_source = False, g, "left generator"
                break
    timings["total"] = time.monotonic() - t0
    return res


def _hh_families(config: str):
    name, _ = parse_config_id(config)
    fams = [("2r", lambda r: (2 * r, r))]
    if name in ("a3", "b3"):
        fams.append(("2r-1", lambda r: (2 * r - 1, r - 1)))
    if name == "a3":
        fams.append(("2r-2", lambda r: (2 * r - 2, r) if r >= 2 else None))
    return fams


def _containment_task(item):
    left, right, budget = item
    try:
        return check_containment(left, right, budget)
    except BudgetExceeded as e:
        return e


def run_containments(pairs: Sequence[Tuple[str, str]], budget: Optional[groebner.Budget] = None, jobs: int = 1):
    """check_containment over many (left, right) specs; BudgetExceeded comes back as a value."""
    items = [(l, r, budget) for l, r in pairs]
    if jobs > 1 and len(items) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as ex:
            return list(ex.map(_containment_task, items))
    return [_containment_task(it) for it in items]


def hh_suite(config: str, r_max: int, budget: Optional[groebner.Budget] = None,
             skip: Iterable[Tuple[str, int]] = (), jobs: int = 1) -> Report:
    """Containments I^(m) ⊆ m^k I^r for the Harbourne-Huneke families, r <= r_max."""
    rep = Report("hh", {"config": config, "r_max": r_max})
    skip = set(skip)
    todo = []
    for fam, fn in _hh_families(config):
        for r in range(1, r_max + 1):
            mk = fn(r)
            if mk is None:
                continue
            m, k = mk
            todo.append((fam, r, m, k, f"({fam}) r={r}: sym^({m}) in m^{k} * I^{r}"))
    run = [t for t in todo if (t[0], t[1]) not in skip]
    results = run_containments([(f"sym:{config}:{m}", f"mpow:{k}:*:pow:{config}:{r}") for _f, r, m, k, _n in run],
                               budget, jobs)
    got = {t[4]: res for t, res in zip(run, results)}
    for fam, r, m, k, name in todo:
        res = got.get(name)
        if res is None:
            rep.add(name, "skipped", "not requested")
        elif isinstance(res, BudgetExceeded):
            rep.add(name, "skipped", f"budget: {res}")
        else:
            rep.timings_ms[name] = res.timings.get("total", 0.0) * 1000
            rep.add(name, "verified", {"holds": res.holds, "witness": res.witness_digest() or None})
    return rep


def hh_degree_precondition(n: int, r: int) -> Tuple[bool, int, int]:
    """α(I_n^(2r)) >= 4rn against r + ω(I_n^r), with ω computed from minimal generators."""
    N = build(f"fermat_like:{n}")
    P = power(N.ideal, r)
    om = max(g.degree() for g in hilbert.minimal_generators(P)) if r <= 2 else r * (2 * n + 2)
    return 4 * r * n > r + om, 4 * r * n, r + om


# -- inequalities ---------------------------------------------------------------------


@dataclass
class InequalityReport:
    kind: str
    h: int
    m: int
    left: Fraction
    right: Fraction
    left_source: str = ""

    @property
    def holds(self) -> bool:
        return self.left >= self.right

    def to_json(self):
        return {"kind": self.kind, "h": self.h, "m": self.m, "left": str(self.left), "right": str(self.right),
                "holds": self.holds, "left_source": self.left_source}


def waldschmidt_lower(config: str) -> Tuple[Fraction, str]:
    """A lower bound for α̂ and where it comes from."""
    name, n = parse_config_id(config)
    if name == "fermat_like":
        return Fraction(2 * n), "verified: I^(m) lies in K^m and α(K) = 2n"
    if name == "a3" or (name == "b3" and n == 1):
        return Fraction(5, 2), "recorded-from-paper: α̂(J) = 5/2"
    if n == 2:
        return Fraction(5, 2), "recorded-from-paper: J_2 lies in the Fermat ideal for n=2"
    return Fraction(n), "recorded-from-paper: J_n lies in the Fermat ideal, α̂ >= n"


def inequality_suite(config: str, m_list: Sequence[int], alphas: Optional[Dict[int, object]] = None,
                     compute: bool = True) -> List[InequalityReport]:
    """Chudnovsky-like (m=1) and Demailly-like bounds α̂ >= (α(I^(m)) + h - 1)/(m + h - 1)."""
    N = build(config)
    h = N.big_height
    lo, src = waldschmidt_lower(config)
    alphas = dict(alphas or {})
    out = [InequalityReport("chudnovsky_like", h, 1, lo,
                            Fraction(min(g.degree() for g in N.gens) + 1, 2), src)]
    for m in m_list:
        a = alphas.get(m)
        if a is None:
            if not compute:
                raise MissingAlpha(f"no α value for m={m}")
            a = symbolic.alpha_symbolic(N, m, "exact")
        up = a.upper if isinstance(a, symbolic.AlphaResult) else int(a)
        if up is None:
            raise MissingAlpha(f"α interval for m={m} has no upper end")
        out.append(InequalityReport("demailly_like", h, m, lo, Fraction(up + h - 1, m + h - 1), src))
    return out


# -- resolutions -------------------------------------------------------------------------

PHI2_ROWS = [
    ["-y", "0", "-w", "0", "x^{a}*z^{a}"],
    ["x", "0", "0", "-w", "-y^{a}*z^{a}"],
    ["z", "-w", "0", "0", "-x^{a}*y^{a}"],
    ["0", "-y", "z", "0", "-x^{a}*w^{a}"],
    ["0", "x", "0", "z", "y^{a}*w^{a}"],
    ["0", "0", "x", "-y", "-z^{a}*w^{a}"],
]
# deleting row i of phi2 leaves the minor coeff * g_index
MINOR_TABLE = [(2, 3), (-2, 6), (2, 1), (-2, 5), (2, 4), (-2, 2)]


def phi2_matrix(n: int) -> PolyMatrix:
    R = build(f"fermat_like:{n}").ring
    return PolyMatrix.from_rows(R, [[parse_poly(s.format(a=n - 1), R) for s in row] for row in PHI2_ROWS])


def phi1_row(n: int) -> List[Polynomial]:
    """Generators in Hilbert-Burch order: entry i is (-1)^i times the i-th minor, halved."""
    g = build(f"fermat_like:{n}").gens
    return [g[idx - 1] * (sign * (-1) ** i // 2) for i, (sign, idx) in enumerate(MINOR_TABLE)]


def _implied_reg(betti: List[List[Tuple[int, int]]]) -> int:
    """max over homological position i >= 0 (generators at i = 0) of shift - i."""
    return max(shift - i for i, layer in enumerate(betti) for _rank, shift in layer)


def resolution_check_fermat_like(n: int, phi2: Optional[PolyMatrix] = None) -> Report:
    rep = Report("resolution_fermat_like", {"n": n})
    if n < 3:
        raise BadParameter("n must be >= 3")
    N = build(f"fermat_like:{n}")
    phi2 = phi2 or phi2_matrix(n)
    phi1 = phi1_row(n)
    t0 = time.monotonic()
    zero = all(sum((phi1[i] * phi2[i, j] for i in range(6)), Polynomial.zero(N.ring)).is_zero() for j in range(5))
    rep.check("phi1*phi2 == 0", zero, "exact product")
    rep.timings_ms["product"] = (time.monotonic() - t0) * 1000
    t0 = time.monotonic()
    minors_ok = True
    got = []
    for i, (c, idx) in enumerate(MINOR_TABLE):
        mnr = det(phi2.delete_row(i))
        ok = mnr == N.gens[idx - 1] * c
        got.append(f"{c}*g{idx}" if ok else "mismatch")
        minors_ok &= ok
    rep.check("maximal minors", minors_ok, got)
    rep.timings_ms["minors"] = (time.monotonic() - t0) * 1000
    t0 = time.monotonic()
    num = hilbert.hilbert_numerator(hilbert.initial_ideal(N.ideal))
    expect = [0] * (4 * n + 1)
    expect[0] = 1
    expect[2 * n + 2] -= 6
    expect[2 * n + 3] += 4
    expect[4 * n] += 1
    rep.check("hilbert numerator", num == expect, hilbert.format_tpoly(num))
    rep.timings_ms["hilbert"] = (time.monotonic() - t0) * 1000
    if rep.ok:
        reg = _implied_reg([[(6, 2 * n + 2)], [(4, 2 * n + 3), (1, 4 * n)]])
        rep.check("implied reg(I_n)", reg == 4 * n - 1, reg)
    rep.notes.append("phi1 is taken in Hilbert-Burch order (g3, g6, g1, g5, g4, g2); "
                     "the row (g1, ..., g6) in index order does not annihilate phi2")
    return rep


def bn_power_numerator(n: int, r: int) -> List[int]:
    a = (n + 2) * r
    out = [0] * ((n + 2) * (r + 1) + 1)
    out[0] += 1
    out[a] -= comb(r + 2, 2)
    out[a + 1] += comb(r + 1, 2)
    out[a + n + 1] += comb(r + 1, 2)
    out[(n + 2) * (r + 1)] -= comb(r, 2)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def bn_power_betti(n: int, r: int):
    return [[(comb(r + 2, 2), (n + 2) * r)],
            [(comb(r + 1, 2), (n + 2) * r + 1), (comb(r + 1, 2), (n + 2) * r + n + 1)],
            [(comb(r, 2), (n + 2) * (r + 1))]]


def resolution_check_bn_power(n: int, r: int, budget: Optional[groebner.Budget] = None) -> Report:
    if r < 2:
        raise BadParameter("r must be >= 2")
    rep = Report("resolution_bn_power", {"n": n, "r": r})
    N = build(f"b3:{n}")
    t0 = time.monotonic()
    with groebner.budget_scope(budget or groebner.Budget()):
        P = power(N.ideal, r)
        num = hilbert.hilbert_numerator(hilbert.initial_ideal(P))
    rep.timings_ms["hilbert"] = (time.monotonic() - t0) * 1000
    expect = bn_power_numerator(n, r)
    rep.check("hilbert numerator", num == expect, hilbert.format_tpoly(num))
    mg = hilbert.minimal_generators(P)
    rep.check("generator count", len(mg) == comb(r + 2, 2), len(mg))
    betti = bn_power_betti(n, r)
    rep.add("betti ranks", "verified" if rep.ok else "failed", [sum(rk for rk, _ in layer) for layer in betti])
    reg = _implied_reg(betti)
    rep.check("implied reg", rep.ok and reg == (n + 2) * r + n, reg)
    return rep


# -- resurgence grid ------------------------------------------------------------------------


def resurgence_grid(config: str, pairs: Sequence[Tuple[int, int]], budget: Optional[groebner.Budget] = None,
                    jobs: int = 1) -> Report:
    """I^(m) ⊆ I^r for each pair; the largest failing m/r is a certified lower bound for ρ."""
    rep = Report("grid", {"config": config, "pairs": [list(p) for p in pairs]})
    worst = None
    holding = []
    results = run_containments([(f"sym:{config}:{m}", f"pow:{config}:{r}") for m, r in pairs], budget, jobs)
    for (m, r), res in zip(pairs, results):
        name = f"sym^({m}) in I^{r}"
        if isinstance(res, BudgetExceeded):
            rep.add(name, "skipped", f"budget: {res}")
            continue
        rep.timings_ms[name] = res.timings.get("total", 0.0) * 1000
        if not res.holds:
            if m >= 2 * r:
                # big height 2 forces I^(2r) ⊆ I^r; a failure here is a bug
                rep.add(name, "failed", "containment with m >= 2r failed")
                continue
            ratio = Fraction(m, r)
            worst = ratio if worst is None or ratio > worst else worst
        else:
            holding.append([m, r])
        rep.add(name, "verified", {"holds": res.holds, "witness": res.witness_digest() or None})
    rep.add("certified rho lower bound", "verified" if worst is not None else "skipped",
            str(worst) if worst is not None else None)
    rep.add("holding pairs", "verified", holding)
    return rep


# -- regularity table for I_3 --------------------------------------------------------------------

REG_I3_CITATION = "reg(I_3^r) <= 8r+9 for r >= 2 and reg(I_3) = 11 (recorded regularity bound)"


def alpha_I3_formula(m: int) -> int:
    k, r = divmod(m, 3)
    return (18 * k, 18 * k + 8, 18 * k + 16)[r]


def reg_I3_bound(r: int) -> int:
    return 11 if r == 1 else 8 * r + 9


def reg_inequality_table_I3(r_max: int, cross_check: Sequence[int] = (1, 2, 3, 4)) -> Report:
    """α(I_3^(m)) against the recorded bound reg(I_3^r) for the least m with 2m >= 3r + 1."""
    rep = Report("reg_table_I3", {"r_max": r_max})
    for m in cross_check:
        a = symbolic.alpha_exact("fermat_like:3", m)
        rep.check(f"alpha(I3^({m})) formula", a == alpha_I3_formula(m), a)
    for r in range(1, r_max + 1):
        rep.add(f"reg(I3^{r}) bound", "recorded-from-paper", reg_I3_bound(r), REG_I3_CITATION)
        m = (3 * r + 1 + 1) // 2
        a = alpha_I3_formula(m)
        b = reg_I3_bound(r)
        rep.check(f"r={r}: alpha(I3^({m})) > reg bound", a > b, f"{a} > {b}")
    return rep


# -- tables -------------------------------------------------------------------------------------

TABLE1_PRINTED = {
    ("3", "2"): "16", ("3", "3k"): "18k", ("3", "3k+1"): "18k+8", ("3", "3k+2"): "18k+16",
    ("4", "2"): "20", ("4", "5"): "42", ("4", ">=3,!=5"): "4m",
    (">=5", "2"): ">=4n+2,<=4n+4", (">=5", ">=3"): "2nm",
    ("alpha_hat", "3"): "3", ("alpha_hat", "4"): "4", ("alpha_hat", ">=5"): "n",
}
TABLE1_CITE = "Table of least degrees of symbolic powers of I_n"
TABLE2_PRINTED = {"2": "6", "2k": "5k", "2k+1": "5k+3", "alpha_hat": "5/2", "rho": "6/5"}
TABLE2_CITE = "Table of least degrees and invariants of J"


def _table1_theorem(n: int, m: int) -> Optional[int]:
    if m == 2 or m == 1:
        return None
    if n == 3:
        return alpha_I3_formula(m)
    if n == 4 and m == 5:
        return None
    return 2 * n * m


def _printed_cell(n: int, m: int) -> Tuple[Tuple[str, str], Optional[int]]:
    """Evaluate the printed I_n-table formula at (n, m)."""
    if n == 3:
        if m == 2:
            return ("3", "2"), 16
        k, r = divmod(m, 3)
        return ("3", ("3k", "3k+1", "3k+2")[r]), (18 * k, 18 * k + 8, 18 * k + 16)[r]
    if n == 4:
        if m == 2:
            return ("4", "2"), 20
        if m == 5:
            return ("4", "5"), 42
        return ("4", ">=3,!=5"), 4 * m
    if m == 2:
        return (">=5", "2"), None
    return (">=5", ">=3"), 2 * n * m


def reproduce_tables(exact_cells: Sequence[Tuple[str, int]] = (
        ("fermat_like:3", 1), ("fermat_like:3", 2), ("fermat_like:3", 3), ("fermat_like:3", 4),
        ("fermat_like:4", 2), ("fermat_like:4", 3), ("fermat_like:4", 4), ("fermat_like:4", 5),
        ("fermat_like:5", 3)),
        j_range: Sequence[int] = range(1, 9),
        sandwich_cells: Sequence[Tuple[int, int]] = tuple((n, m) for n in (3, 4, 5, 6) for m in range(2, 9))) -> Report:
    """Regenerate both tables; every disagreement with the printed text is flagged."""
    rep = Report("tables", {"exact_cells": [list(c) for c in exact_cells], "j_range": list(j_range)})
    discrepancies = []

    # I_n table, exact cross-checks
    for cid, m in exact_cells:
        n = int(cid.split(":")[1])
        a = symbolic.alpha_exact(cid, m)
        name = f"In-table alpha(I_{n}^({m}))"
        if m == 1:
            # not a table cell; the generators have degree 2n + 2
            rep.check(name, a == 2 * n + 2, a)
            continue
        cell, printed = _printed_cell(n, m)
        theorem = _table1_theorem(n, m)
        if theorem is not None and a != theorem:
            rep.add(name, "failed", {"computed": a, "theorem": theorem})
            continue
        if printed is not None and printed != a:
            discrepancies.append({"cell": list(cell), "printed": TABLE1_PRINTED[cell], "value_at": [n, m],
                                  "printed_value": printed, "theorem_value": a})
        rep.add(name, "verified", a, TABLE1_CITE)

    # I_n table, sandwich cells (bounds from K and witnesses; Bezout for I_3 with computed base facts)
    from . import bezout

    facts = [bezout.computed_base_fact("fermat_like:3", 1), bezout.computed_base_fact("fermat_like:3", 2)]
    for n, m in sandwich_cells:
        cid = f"fermat_like:{n}"
        res = symbolic.alpha_symbolic(cid, m, "sandwich", base_facts=facts if n == 3 else None, use_bezout=True)
        cell, printed = _printed_cell(n, m)
        name = f"In-table sandwich alpha(I_{n}^({m}))"
        theorem = _table1_theorem(n, m)
        if res.is_exact:
            if theorem is not None and res.exact != theorem:
                rep.add(name, "failed", {"pinned": res.exact, "theorem": theorem})
                continue
            if printed is not None and printed != res.exact:
                discrepancies.append({"cell": list(cell), "printed": TABLE1_PRINTED[cell], "value_at": [n, m],
                                      "printed_value": printed, "theorem_value": res.exact})
            rep.add(name, "verified", res.exact, TABLE1_CITE)
        else:
            # an interval: the printed cell must at least be consistent with it
            consistent = printed is None or res.lower <= printed <= res.upper
            status = "recorded-from-paper" if consistent else "failed"
            rep.add(name, status, {"interval": [res.lower, res.upper], "printed": TABLE1_PRINTED[cell]},
                    TABLE1_CITE)

    # I_n table, Waldschmidt row: α̂(I_n) pinched between the K bound and F_n^k / 3k
    row_mismatch = []
    for n, key in ((3, "3"), (4, "4"), (5, ">=5")):
        wr = symbolic.waldschmidt_report(f"fermat_like:{n}", 3)
        pinned = wr.pinched
        printed = Fraction(n) if key == ">=5" else Fraction(int(TABLE1_PRINTED[("alpha_hat", key)]))
        rep.add(f"In-table alpha_hat(I_{n})", "verified" if pinned is not None else "failed", str(pinned), TABLE1_CITE)
        if pinned is not None and pinned != printed:
            row_mismatch.append(f"n={n}: printed {printed}, pinned {pinned}")
    if row_mismatch:
        discrepancies.append({"cell": ["alpha_hat", "row"], "printed": "3 / 4 / n", "theorem_value": "2n",
                              "value_at": row_mismatch})

    # J table
    for m in j_range:
        a = symbolic.alpha_exact("a3", m)
        k, r = divmod(m, 2)
        if m == 2:
            printed, key = 6, "2"
        elif r == 0:
            printed, key = 5 * k, "2k"
        else:
            printed, key = 5 * k + 3, "2k+1"
        if a != printed:
            discrepancies.append({"cell": ["J", key], "printed": TABLE2_PRINTED[key], "value_at": m,
                                  "printed_value": printed, "theorem_value": a})
        rep.add(f"J-table alpha(J^({m}))", "verified", a, TABLE2_CITE)
    wr = symbolic.waldschmidt_report("a3", max(j_range), "exact")
    rep.add("J-table inf alpha(J^(m))/m", "verified" if wr.upper == Fraction(5, 2) else "failed", str(wr.upper),
            TABLE2_CITE)
    rep.add("J-table alpha_hat(J)", "recorded-from-paper", "5/2", TABLE2_CITE)
    rep.add("J-table rho(J)", "recorded-from-paper", "6/5", TABLE2_CITE)

    # one flag per printed cell
    flagged: Dict[Tuple[str, ...], dict] = {}
    for d in discrepancies:
        flagged.setdefault(tuple(d["cell"]), d)
    rep.add("discrepancies", "verified", list(flagged.values()))
    rep.inputs["printed_table1"] = {"|".join(k): v for k, v in TABLE1_PRINTED.items()}
    rep.inputs["printed_table2"] = dict(TABLE2_PRINTED)
    return rep


def table_rows(rep: Report) -> List[List[str]]:
    """Flat rows (table, row, column, value) of the regenerated tables."""
    rows = []
    for key, printed in TABLE1_PRINTED.items():
        theorem = {"4m": "8m", "3": "6", "4": "8", "n": "2n"}.get(printed, printed) if key[0] in (
            "4", "alpha_hat") else printed
        rows.append(["1", key[0], key[1], printed, theorem])
    for key, printed in TABLE2_PRINTED.items():
        rows.append(["2", "J", key, printed, printed])
    return rows


# -- quick bundle -------------------------------------------------------------------------------


def identity_checks() -> Report:
    from .catalog import a3_identities, a3_memberships, special_forms

    rep = Report("identities")
    for n in range(3, 7):
        F = special_forms(f"fermat_like:{n}")
        rep.check(f"h_{n} = g_{n} - f_{n}", F["h"] == F["g"] - F["f"])
        rep.check(f"F_{n} = f_{n} g_{n} h_{n}", F["F"] == F["f"] * F["g"] * F["h"])
    for name, (lhs, rhs) in a3_identities().items():
        rep.check(f"identity {name}", lhs == rhs)
    K = build("a3").ci_component
    for name, f, e in a3_memberships():
        rep.check(f"{name} in K'_1^{e}", power(K, e).contains(f))
    return rep


def decomposition_checks(configs: Sequence[str] = ("a3", "b3:2", "fermat_like:3")) -> Report:
    from .idealops import equal_as_ideals, intersect_many

    rep = Report("decompositions")
    for cid in configs:
        N = build(cid)
        t0 = time.monotonic()
        rep.check(f"{cid} components", equal_as_ideals(intersect_many(N.components), N.ideal))
        if N.alt_components:
            rep.check(f"{cid} alternative components", equal_as_ideals(intersect_many(N.alt_components), N.ideal))
        rep.timings_ms[cid] = (time.monotonic() - t0) * 1000
    return rep


def bezout_checks() -> Report:
    from . import bezout as bz

    rep = Report("bezout")
    inc = build("a3").incidence
    claims = [("alpha(J^(2)) >= 6", bz.ReductionClaim.uniform(inc, 5, 2), ()),
              ("alpha(J^(4)) >= 10", bz.ReductionClaim.uniform(inc, 9, 4), ())]
    for n in range(3, 7):
        claims.append((f"alpha(I_{n}^(2)) >= {4 * n + 2}",
                       bz.ReductionClaim.uniform(build(f"fermat_like:{n}").incidence, 4 * n + 1, 2), ()))
    facts = (bz.computed_base_fact("fermat_like:3", 1), bz.computed_base_fact("fermat_like:3", 2))
    inc3 = build("fermat_like:3").incidence
    for k in (1, 2):
        claims.append((f"alpha(I_3^({3 * k + 1})) >= {18 * k + 8}",
                       bz.ReductionClaim.uniform(inc3, 18 * k + 7, 3 * k + 1), facts))
        claims.append((f"alpha(I_3^({3 * k + 2})) >= {18 * k + 16}",
                       bz.ReductionClaim.uniform(inc3, 18 * k + 15, 3 * k + 2), facts))
    for name, claim, fs in claims:
        cert = bz.certify_lower_bound(claim, fs)
        ok = bool(cert) and bz.replay(cert, claim)
        rep.check(name, ok, cert.terminal.get("kind") if cert else cert.reason)
        if cert:
            rep.certificates.append(cert.to_json())
    return rep


def multiplicity_checks() -> Report:
    rep = Report("multiplicities")
    for cid, deg in (("fermat_like:3", 42), ("a3", 7), ("b3:2", 13)):
        rep.check(f"degree R/{cid}", hilbert.multiplicity(build(cid).ideal) == deg, hilbert.multiplicity(build(cid).ideal))
    for cid in ("fermat_like:3", "fermat_like:4"):
        d = hilbert.dimension(build(cid).ideal)
        rep.check(f"dim R/{cid}", d == 2, d)
    return rep


def quick_report() -> Report:
    """Identities, decompositions, resolutions, multiplicities, certificates and J's α values."""
    rep = Report("report")
    t0 = time.monotonic()
    for name, sub in (("identities", identity_checks), ("decompositions", decomposition_checks),
                      ("multiplicities", multiplicity_checks), ("bezout", bezout_checks)):
        t = time.monotonic()
        rep.extend(sub(), prefix=f"{name}: ")
        rep.timings_ms[name] = (time.monotonic() - t) * 1000
    for n in (3, 4):
        rep.extend(resolution_check_fermat_like(n), prefix=f"resolution n={n}: ")
    for n, r in ((1, 2), (2, 2)):
        rep.extend(resolution_check_bn_power(n, r), prefix=f"resolution J_{n}^{r}: ")
    expect = {1: 3, 2: 6, 3: 8, 4: 10, 5: 13, 6: 15}
    for m, a in expect.items():
        got = symbolic.alpha_exact("a3", m)
        rep.check(f"alpha(J^({m}))", got == a, got)
    rep.timings_ms["total"] = (time.monotonic() - t0) * 1000
    return rep
