"""Symbolic powers of catalog ideals and their initial degrees.

The m-th symbolic power is the intersection of the m-th powers of the
decomposition components.  Besides the full intersection (a Gröbner
computation) we work degree by degree: the degree-d piece of the symbolic
power is the intersection of the degree-d pieces of the component powers,
which is plain linear algebra and gives exact answers for α cheaply.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from . import groebner
from .catalog import NamedIdeal, build, witness_catalog
from .errors import BadParameter, BudgetExceeded, NoWitnessKnown
from .hilbert import minimal_generators
from .idealops import Ideal, _degree_monomials, intersect_many, monomial_membership, power
from .linalg import Echelon, integral, intersect_spans, split_span
from .polyring import Polynomial


def _base(base) -> NamedIdeal:
    return build(base) if isinstance(base, str) else base


@dataclass
class SymbolicPower:
    base: NamedIdeal
    m: int
    gens: List[Polynomial]
    mode: str = "full"
    seconds: float = 0.0

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.base.ring, self.gens, name=f"{self.base.id}^({self.m})")

    def alpha(self) -> int:
        return min(g.degree() for g in self.gens)

    def omega(self) -> int:
        return max(g.degree() for g in self.gens)


def component_powers(base, m: int) -> List[Ideal]:
    N = _base(base)
    return [power(C, m) for C in N.components]


_full_cache: Dict[Tuple[str, int], SymbolicPower] = {}


def symbolic_power(base, m: int, budget: Optional[groebner.Budget] = None) -> SymbolicPower:
    """Full-mode m-th symbolic power: minimal generators of the component-power intersection."""
    if m < 1:
        raise BadParameter("m must be >= 1")
    N = _base(base)
    key = (N.id, m)
    if key in _full_cache:
        return _full_cache[key]
    t0 = time.monotonic()
    I = intersect_many(component_powers(N, m), budget=budget)
    gens = minimal_generators(I)
    sp = SymbolicPower(N, m, sorted(gens, key=lambda g: (g.degree(), str(g))), "full", time.monotonic() - t0)
    _full_cache[key] = sp
    return sp


@lru_cache(maxsize=None)
def _component_gb(cid: str, index: int, m: int) -> groebner.GroebnerBasis:
    C = build(cid).components[index]
    return power(C, m).gb()


def _in_linear_prime_power(f: Polynomial, C: Ideal, m: int) -> bool:
    idx = [next(i for i, v in enumerate(next(iter(g.monomials()))) if v) for g in C.gens]
    return all(sum(e[i] for i in idx) >= m for e in f.monomials())


def symbolic_membership(f: Polynomial, base, m: int) -> bool:
    """f lies in the m-th power of every component (linear primes tested termwise)."""
    N = _base(base)
    if f.is_zero():
        return True
    if f.ring.variables != N.ring.variables:
        raise BadParameter("polynomial and config live in different rings")
    comps = list(enumerate(N.components))
    # cheap tests first
    comps.sort(key=lambda ic: 0 if "linear-prime" in ic[1].tags else 1)
    for i, C in comps:
        if "linear-prime" in C.tags:
            if not _in_linear_prime_power(f, C, m):
                return False
            continue
        if f.degree() < m * min(g.degree() for g in C.gens):
            return False
        if not groebner.reduces_to_zero(f, _component_gb(N.id, i, m)):
            return False
    return True


# -- graded pieces -----------------------------------------------------------

def _vec(p: Polynomial) -> Dict[tuple, int]:
    return integral(dict(p.items()))


def _span_in_degree(gens: Sequence[Polynomial], d: int, nvars: int) -> List[Dict[tuple, int]]:
    E = Echelon()
    for g in gens:
        k = d - g.degree()
        if k < 0:
            continue
        for e in _degree_monomials(nvars, k):
            E.add({tuple(a + b for a, b in zip(e, mono)): c for mono, c in _vec(g).items()})
    return list(E.rows.values())


@lru_cache(maxsize=None)
def _cached_powers(cid: str, m: int) -> Tuple[Ideal, ...]:
    return tuple(power(C, m) for C in build(cid).components)


def graded_piece(base, m: int, d: int) -> List[Polynomial]:
    """Basis of the degree-d piece of the m-th symbolic power."""
    N = _base(base)
    n = N.ring.nvars
    powers = _cached_powers(N.id, m)
    mono = [P for P in powers if P.is_monomial]
    rest = [P for P in powers if not P.is_monomial]
    mono_exps = [[next(iter(g.monomials())) for g in P.gens] for P in mono]

    def bad(e) -> bool:
        return not all(any(all(a <= b for a, b in zip(g, e)) for g in gens) for gens in mono_exps)

    if not rest:
        good = [e for e in _degree_monomials(n, d) if not bad(e)]
        return [Polynomial._raw(N.ring, {e: 1}) for e in good]
    rest.sort(key=lambda P: len(_span_in_degree(P.gens, d, n)))
    span = split_span(_span_in_degree(rest[0].gens, d, n), bad)
    for P in rest[1:]:
        if not span:
            break
        span = intersect_spans(span, _span_in_degree(P.gens, d, n))
    return [Polynomial(N.ring, v) for v in span]


def graded_dimension(base, m: int, d: int) -> int:
    return len(graded_piece(base, m, d))


# -- alpha --------------------------------------------------------------------

@dataclass
class AlphaResult:
    """α of a symbolic power, exact or as a certified interval [lower, upper]."""

    config: str
    m: int
    lower: int
    upper: Optional[int]
    strategy: str
    evidence: Dict[str, object] = field(default_factory=dict)

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.upper == self.lower else None

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    def __str__(self):
        if self.is_exact:
            return str(self.lower)
        return f"[{self.lower},{self.upper if self.upper is not None else 'inf'}]"

    def to_json(self):
        return {"config": self.config, "m": self.m, "lower": self.lower, "upper": self.upper,
                "exact": self.exact, "strategy": self.strategy, "evidence": self.evidence}


def ci_lower_bound(base, m: int) -> int:
    """m * α(K) for the complete-intersection component K (I^(m) sits in K^m)."""
    N = _base(base)
    K = N.ci_component
    return m * min(g.degree() for g in K.gens)


def power_upper_bound(base, m: int) -> int:
    """α(I^m) = m α(I): ordinary powers sit inside symbolic ones."""
    N = _base(base)
    return m * min(g.degree() for g in N.gens)


def witness_upper_bound(base, m: int, verify: bool = True):
    """(degree, label) of the cheapest catalog witness, membership-checked if asked."""
    N = _base(base)
    try:
        entries = witness_catalog(N.id, m)
    except NoWitnessKnown:
        return None
    for w in entries:
        if not verify or symbolic_membership(w.polynomial, N, m):
            return w.claimed_degree, w.label
    return None


def alpha_exact(base, m: int, budget: Optional[groebner.Budget] = None, start: Optional[int] = None) -> int:
    """Least d with a nonzero degree-d piece, scanning upward from a proven lower bound."""
    N = _base(base)
    budget = (budget or groebner.Budget()).start()
    d = start if start is not None else max(m, ci_lower_bound(N, m))
    hi = power_upper_bound(N, m)
    w = witness_upper_bound(N, m, verify=False)
    if w:
        hi = min(hi, w[0])
    while d <= hi:
        budget.check_time()
        if graded_piece(N, m, d):
            return d
        d += 1
    raise AssertionError(f"no element of degree <= {hi} found, contradicting a known upper bound")


def alpha_symbolic(base, m: int, strategy: str = "sandwich", base_facts=None,
                   budget: Optional[groebner.Budget] = None, use_bezout: bool = False) -> AlphaResult:
    """α(I^(m)).

    ``exact`` scans graded pieces; ``full`` takes the least generator degree
    of the full intersection; ``sandwich`` pairs the K-lower bound (improved
    by a Bezout certificate if ``use_bezout``) with witness and power upper bounds.
    """
    from . import bezout

    N = _base(base)
    if m < 1:
        raise BadParameter("m must be >= 1")
    if strategy == "exact":
        a = alpha_exact(N, m, budget=budget)
        return AlphaResult(N.id, m, a, a, "exact", {"method": "graded linear algebra"})
    if strategy == "full":
        a = symbolic_power(N, m, budget=budget).alpha()
        return AlphaResult(N.id, m, a, a, "full", {"method": "component-power intersection"})
    if strategy != "sandwich":
        raise BadParameter(f"unknown strategy {strategy!r}")
    ev: Dict[str, object] = {}
    lo = ci_lower_bound(N, m)
    ev["ci_lower"] = lo
    cert = bezout.best_lower_bound(N, m, base_facts=base_facts) if use_bezout else None
    if cert is not None and cert.bound > lo:
        lo = cert.bound
        ev["bezout_lower"] = cert.bound
        ev["certificate"] = cert.to_json()
    hi = power_upper_bound(N, m)
    ev["power_upper"] = hi
    w = witness_upper_bound(N, m)
    if w is not None:
        ev["witness"] = w[1]
        ev["witness_upper"] = w[0]
        hi = min(hi, w[0])
    return AlphaResult(N.id, m, lo, hi, "sandwich", ev)


@dataclass
class WaldschmidtReport:
    config: str
    rows: List[Tuple[int, AlphaResult, Fraction]]
    lower: Fraction
    upper: Fraction

    @property
    def pinched(self) -> Optional[Fraction]:
        return self.lower if self.lower == self.upper else None

    def to_json(self):
        return {"config": self.config,
                "rows": [{"m": m, "alpha": a.to_json(), "upper_ratio": str(r)} for m, a, r in self.rows],
                "certified_lower": str(self.lower), "inf_upper_ratio": str(self.upper),
                "pinched": str(self.pinched) if self.pinched is not None else None}


def waldschmidt_report(base, m_max: int, strategy: str = "sandwich",
                       budget: Optional[groebner.Budget] = None, use_bezout: bool = False) -> WaldschmidtReport:
    """Running infimum of α(I^(m))/m upper ratios against the K-component lower bound."""
    N = _base(base)
    rows = []
    best = None
    for m in range(1, m_max + 1):
        try:
            a = alpha_symbolic(N, m, strategy, budget=budget, use_bezout=use_bezout)
        except BudgetExceeded:
            continue
        r = Fraction(a.upper, m)
        best = r if best is None or r < best else best
        rows.append((m, a, r))
    # α(K^m) = m α(K) and I^(m) ⊆ K^m bound every ratio from below
    lower = Fraction(ci_lower_bound(N, 1))
    return WaldschmidtReport(N.id, rows, lower, best)
