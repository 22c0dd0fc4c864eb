"""Graded invariants: initial ideals, Hilbert series, dimension, degree, α, ω, β."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from . import groebner
from .errors import NeverAttained, NotHomogeneous, NotMonomial, UnitIdeal, ZeroIdeal
from .idealops import Ideal, _degree_monomials, minimalize_monomials
from .linalg import Echelon
from .polyring import GREVLEX, MonomialOrder, Polynomial

# integer polynomials in t are coefficient lists, index = power of t


def _padd(a: List[int], b: List[int]) -> List[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _shift(a: List[int], k: int) -> List[int]:
    return [0] * k + a


def _trim(a: List[int]) -> List[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _one_minus_t_pow(d: int) -> List[int]:
    out = [0] * (d + 1)
    out[0] = 1
    out[d] -= 1
    return _trim(out)


def format_tpoly(coeffs: Sequence[int]) -> str:
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    return head + "".join(f" {s} {b}" for s, b in parts[1:])


@dataclass(frozen=True)
class HilbertSeries:
    """numerator / (1 - t)^denom_power, the Hilbert series of R/I."""

    numerator: Tuple[int, ...]
    denom_power: int

    def simplified(self) -> "HilbertSeries":
        num = list(self.numerator)
        N = self.denom_power
        while N > 0 and sum(num) == 0 and any(num):
            # synthetic division by (1 - t)
            q = []
            acc = 0
            for c in num[:-1]:
                acc += c
                q.append(acc)
            num = _trim(q or [0])
            N -= 1
        return HilbertSeries(tuple(num), N)

    @property
    def dimension(self) -> int:
        return self.simplified().denom_power

    @property
    def multiplicity(self) -> int:
        return sum(self.simplified().numerator)

    def coefficients(self, upto: int) -> List[int]:
        """Hilbert function values h(0..upto)."""
        series = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            if i <= upto:
                series[i] = c
        for _ in range(self.denom_power):
            acc = 0
            for i in range(upto + 1):
                acc += series[i]
                series[i] = acc
        return series

    def __str__(self):
        return f"({format_tpoly(self.numerator)}) / (1 - t)^{self.denom_power}"


def initial_ideal(I: Ideal, order: MonomialOrder | None = None) -> Ideal:
    order = order or GREVLEX
    if I.is_zero():
        return I
    if I.is_monomial:
        return I
    G = I.gb(order)
    ring = I.ring
    lms = [g.leading_monomial(order) for g in G.basis]
    return Ideal(ring, [Polynomial._raw(ring, {e: 1}) for e in minimalize_monomials(lms)],
                 tags=("monomial",))


def _numerator(gens: List[tuple]) -> List[int]:
    if not gens:
        return [1]
    # pairwise coprime generators (in particular pure powers): a complete intersection
    support = [frozenset(i for i, v in enumerate(e) if v) for e in gens]
    used = set()
    coprime = True
    for s in support:
        if used & s:
            coprime = False
            break
        used |= s
    if coprime:
        out = [1]
        for e in gens:
            out = _pmul(out, _one_minus_t_pow(sum(e)))
        return out
    # pivot: most frequent variable among non-pure-power generators, lowest index on ties
    n = len(gens[0])
    counts = [0] * n
    for e, s in zip(gens, support):
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    var = max(range(n), key=lambda i: (counts[i], -i))
    k = min(e[var] for e in gens if e[var] and len([v for v in e if v]) > 1)
    pivot = tuple(k if i == var else 0 for i in range(n))
    plus = minimalize_monomials(list(gens) + [pivot])
    colon = minimalize_monomials(tuple(max(v - p, 0) for v, p in zip(e, pivot)) for e in gens)
    # HS(R/M) = HS(R/(M + p)) + t^deg(p) HS(R/(M : p))
    return _padd(_numerator(plus), _shift(_numerator(colon), k))


def hilbert_numerator(M: Ideal) -> List[int]:
    """Numerator of HS(R/M) over (1 - t)^nvars for a monomial ideal M."""
    if M.is_zero():
        return [1]
    if not M.is_monomial:
        raise NotMonomial("hilbert_numerator needs a monomial ideal")
    exps = minimalize_monomials(next(iter(g.monomials())) for g in M.gens)
    return _numerator(exps)


def hilbert_series(I: Ideal) -> HilbertSeries:
    """Hilbert series of R/I for homogeneous I, via the initial ideal."""
    n = I.ring.nvars
    if I.is_zero():
        return HilbertSeries((1,), n)
    _require_homogeneous(I)
    return HilbertSeries(tuple(hilbert_numerator(initial_ideal(I))), n)


def _require_homogeneous(I: Ideal):
    if not all(g.is_homogeneous() for g in I.gens):
        raise NotHomogeneous("ideal has inhomogeneous generators")


def _require_proper(I: Ideal):
    if not I.is_zero() and I.gb().is_unit():
        raise UnitIdeal("the unit ideal has an empty quotient")


def dimension(I: Ideal) -> int:
    """Krull dimension of R/I."""
    _require_proper(I)
    return hilbert_series(I).dimension


def multiplicity(I: Ideal) -> int:
    """Degree (multiplicity) of R/I."""
    _require_proper(I)
    return hilbert_series(I).multiplicity


def standard_monomial_counts(I: Ideal, upto: int) -> List[int]:
    """Brute-force count of monomials outside in(I) in each degree (test oracle)."""
    lead = [next(iter(g.monomials())) for g in initial_ideal(I).gens] if not I.is_zero() else []
    out = []
    for d in range(upto + 1):
        cnt = 0
        for e in _degree_monomials(I.ring.nvars, d):
            if not any(all(a <= b for a, b in zip(m, e)) for m in lead):
                cnt += 1
        out.append(cnt)
    return out


def _vec(p: Polynomial) -> Dict[tuple, int]:
    from .linalg import integral

    return integral(dict(p.items()))


def minimal_generators(I: Ideal, assume_gb: bool = False) -> List[Polynomial]:
    """A minimal homogeneous generating set.

    Generators are visited in ascending degree (stable by position).  A
    generator of degree d is kept unless its normal form modulo the kept
    lower-degree generators lies in the span of the kept degree-d ones.
    """
    _require_homogeneous(I)
    gens = sorted(I.gens, key=lambda g: g.degree())
    if I.is_monomial:
        keep = minimalize_monomials(next(iter(g.monomials())) for g in gens)
        return [Polynomial._raw(I.ring, {e: 1}) for e in keep]
    kept: List[Polynomial] = []
    i = 0
    while i < len(gens):
        d = gens[i].degree()
        block = []
        while i < len(gens) and gens[i].degree() == d:
            block.append(gens[i])
            i += 1
        G = groebner.truncated_basis(kept, d) if kept else None
        E = Echelon()
        for g in block:
            r = groebner.normal_form(g, G) if G is not None else g
            if r.is_zero():
                continue
            if E.add(_vec(r)) is not None:
                kept.append(g)
    return kept


def alpha(I: Ideal) -> int:
    """Least degree of a nonzero homogeneous element."""
    if I.is_zero():
        raise ZeroIdeal("alpha of the zero ideal is undefined")
    _require_homogeneous(I)
    return min(g.degree() for g in I.gens)


def omega(I: Ideal) -> int:
    """Largest degree in a minimal homogeneous generating set."""
    if I.is_zero():
        raise ZeroIdeal("omega of the zero ideal is undefined")
    return max(g.degree() for g in minimal_generators(I))


@dataclass(frozen=True)
class GradedPieceBasis:
    degree: int
    basis: Tuple[Polynomial, ...]

    def __len__(self):
        return len(self.basis)


def graded_piece(I: Ideal, t: int) -> GradedPieceBasis:
    """Basis of the degree-t piece, row-reduced from monomial multiples of generators."""
    _require_homogeneous(I)
    ring = I.ring
    E = Echelon()
    for g in I.gens:
        d = g.degree()
        if d > t:
            continue
        for e in _degree_monomials(ring.nvars, t - d):
            E.add(_vec(Polynomial._raw(ring, {e: 1}) * g))
    basis = tuple(Polynomial(ring, row) for _pivot, row in sorted(E.rows.items(), reverse=True))
    return GradedPieceBasis(t, basis)


def beta(I: Ideal, ambient_codim: int = 2) -> int:
    """Least t whose degree-t piece generates an ideal of codimension >= 2."""
    n = I.ring.nvars
    start = alpha(I)
    stop = omega(I) + 2
    for t in range(start, stop + 1):
        piece = graded_piece(I, t)
        if not piece.basis:
            continue
        sub = Ideal(I.ring, list(piece.basis))
        if dimension(sub) <= n - ambient_codim:
            return t
    raise NeverAttained(f"no degree up to {stop} cuts out a codimension-{ambient_codim} locus")
