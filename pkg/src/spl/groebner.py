"""Buchberger's algorithm over the rationals, with normal forms and elimination.

Internally every monomial is packed into one Python ``int``: the high fields
hold an additive sort key for the monomial order, the low fields hold the raw
exponents.  Integer comparison is then the monomial order, integer addition
is monomial multiplication, and a guard bit per field turns divisibility into
a single subtraction.  Coefficients are kept as integers (fraction-free
reduction) and rows are divided by their content after each reduction.
"""
from __future__ import annotations

import contextlib
import hashlib
import heapq
import logging
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadOrder, BudgetExceeded, OrderMismatch, RingMismatch
from .polyring import MonomialOrder, Polynomial, RingSpec

log = logging.getLogger(__name__)

_BITS = 16
_FIELD_MAX = 1 << (_BITS - 2)


class Packer:
    """Packs exponent tuples of one ring/order into order-preserving ints."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = nvars
        self.order = order
        if order.kind == "block":
            k = order.elim_count
            if not 0 < k < nvars:
                raise BadOrder(f"block order with {k} eliminated of {nvars} variables")
            self.blocks = [(0, k), (k, nvars)]
        elif order.kind == "grevlex":
            self.blocks = [(0, nvars)]
        else:
            self.blocks = None
        nkey = nvars if self.blocks is None else sum(b - a for a, b in self.blocks)
        self.nfields = nkey + nvars
        self.guard = 0
        for i in range(self.nfields):
            self.guard |= 1 << (i * _BITS + _BITS - 1)
        self.mask = (1 << _BITS) - 1
        self._unpack_cache: Dict[int, Tuple[int, ...]] = {}

    def _key_fields(self, e):
        if self.blocks is None:
            return list(e)
        out = []
        for a, b in self.blocks:
            part = e[a:b]
            out.append(sum(part))
            # partial sums e_a..e_k for k = b-2 down to a: grevlex tie-breakers
            s = 0
            sums = []
            for v in part[:-1]:
                s += v
                sums.append(s)
            out.extend(reversed(sums))
        return out

    def pack(self, e) -> int:
        if sum(e) >= _FIELD_MAX:
            raise BudgetExceeded(f"monomial degree {sum(e)} exceeds packing range")
        fields = self._key_fields(e) + list(e)
        out = 0
        for v in fields:
            out = (out << _BITS) | v
        return out

    def unpack(self, m: int) -> Tuple[int, ...]:
        hit = self._unpack_cache.get(m)
        if hit is None:
            mask = self.mask
            hit = tuple((m >> (_BITS * (self.nvars - 1 - i))) & mask for i in range(self.nvars))
            if len(self._unpack_cache) < 1_000_000:
                self._unpack_cache[m] = hit
        return hit

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.pack([max(i, j) for i, j in zip(self.unpack(a), self.unpack(b))])

    def coprime(self, a: int, b: int) -> bool:
        return not any(i and j for i, j in zip(self.unpack(a), self.unpack(b)))


def _content(coeffs) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _make_primitive(f: Dict[int, int]) -> Dict[int, int]:
    if not f:
        return f
    g = _content(f.values())
    if f[max(f)] < 0:
        g = -g
    if g != 1:
        f = {m: c // g for m, c in f.items()}
    return f


def to_packed(p: Polynomial, packer: Packer) -> Dict[int, int]:
    """Integer-coefficient packed dict of ``p`` scaled to content 1."""
    den = 1
    for c in p._terms.values():
        if type(c) is Fraction:
            den = den * c.denominator // gcd(den, c.denominator)
    pack = packer.pack
    f = {pack(e): int(c * den) for e, c in p._terms.items()}
    return _make_primitive(f)


def from_packed(f: Dict[int, object], packer: Packer, ring: RingSpec) -> Polynomial:
    unpack = packer.unpack
    return Polynomial(ring, {unpack(m): c for m, c in f.items()})


class _Reducer:
    __slots__ = ("lm", "lc", "tail", "poly", "sugar")

    def __init__(self, poly: Dict[int, int], sugar=0):
        self.poly = poly
        self.lm = max(poly)
        self.lc = poly[self.lm]
        self.tail = [(m, c) for m, c in poly.items() if m != self.lm]
        self.sugar = sugar


def _reduce(f: Dict[int, int], reducers: Sequence[_Reducer], packer: Packer, full: bool = True):
    """Fraction-free reduction; returns (remainder, multiplier).

    ``multiplier * f`` minus an element of the ideal equals ``remainder``.
    """
    divides_guard = packer.guard
    f = dict(f)
    rem: Dict[int, int] = {}
    mult = 1
    heap = [-m for m in f]
    heapq.heapify(heap)
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        m = -pop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        red = None
        mg = m | divides_guard
        for r in reducers:
            if (mg - r.lm) & divides_guard == divides_guard:
                red = r
                break
        if red is None:
            rem[m] = c
            if not full:
                rem.update(f)
                break
            continue
        q = m - red.lm
        lc = red.lc
        g = gcd(c, lc)
        a = lc // g
        b = c // g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            mult *= a
            for k in f:
                f[k] *= a
            for k in rem:
                rem[k] *= a
        get = f.get
        for tm, tc in red.tail:
            mm = tm + q
            v = get(mm)
            if v is None:
                f[mm] = -b * tc
                push(heap, -mm)
            else:
                v -= b * tc
                if v:
                    f[mm] = v
                else:
                    del f[mm]
        if len(f) > 64 and a != 1:
            cont = _content(list(f.values()) + list(rem.values()))
            if cont > 1:
                for k in f:
                    f[k] //= cont
                for k in rem:
                    rem[k] //= cont
                mult = Fraction(mult, cont)
    return rem, mult


# -- public types ----------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis, normalized to primitive integer elements."""

    ring: RingSpec
    order: MonomialOrder
    basis: Tuple[Polynomial, ...]
    source_hash: str
    _packer: Packer = field(repr=False, compare=False, default=None)
    _reducers: Tuple[_Reducer, ...] = field(repr=False, compare=False, default=())

    @property
    def leading_monomials(self) -> List[Tuple[int, ...]]:
        return [g.leading_monomial(self.order) for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


@dataclass
class Budget:
    """Guardrails for a Buchberger run; ``None`` disables a limit."""

    max_degree: Optional[int] = None
    max_basis: Optional[int] = 20000
    seconds: Optional[float] = None
    deadline: Optional[float] = None

    def start(self) -> "Budget":
        if self.seconds is not None and self.deadline is None:
            return Budget(self.max_degree, self.max_basis, self.seconds, time.monotonic() + self.seconds)
        return self

    def check_time(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded(f"wall-clock budget of {self.seconds}s exhausted")


_DEFAULT_BUDGET = Budget()
_active_budget: Optional[Budget] = None
_disk_cache = None
_memo: "OrderedDict[str, GroebnerBasis]" = OrderedDict()
_MEMO_SIZE = 256


@contextlib.contextmanager
def budget_scope(budget: Budget):
    """Apply ``budget`` to every Buchberger run started inside the block."""
    global _active_budget
    prev = _active_budget
    _active_budget = budget.start()
    try:
        yield _active_budget
    finally:
        _active_budget = prev


@contextlib.contextmanager
def cache_scope(cache):
    """Route Buchberger results through an on-disk cache (see ``spl.cache``)."""
    global _disk_cache
    prev = _disk_cache
    _disk_cache = cache
    try:
        yield cache
    finally:
        _disk_cache = prev


def clear_memo():
    _memo.clear()


def ideal_hash(ring: RingSpec, gens: Sequence[Polynomial], order: MonomialOrder) -> str:
    """64-hex key of the canonical serialization of an ideal plus order."""
    from .polyexpr import print_poly

    canon = sorted({print_poly(g.primitive().with_ring(ring.with_order(GREVLEX_ORDER)))
                    for g in gens if g})
    text = "ring " + " ".join(ring.variables) + "\n" + "".join(f"gen {s}\n" for s in canon)
    text += f"order {order.name}\n"
    return hashlib.sha256(text.encode()).hexdigest()


GREVLEX_ORDER = MonomialOrder("grevlex")


def _wdeg(packer: Packer, weights, m: int) -> int:
    e = packer.unpack(m)
    if weights is None:
        return sum(e)
    return sum(w * v for w, v in zip(weights, e))


def _buchberger_packed(polys: List[Dict[int, int]], packer: Packer, weights=None,
                       budget: Optional[Budget] = None, stop_degree: Optional[int] = None,
                       stop_when=None) -> List[Dict[int, int]]:
    """Core loop: normal selection by sugar plus Gebauer–Möller pair pruning."""
    budget = budget or _DEFAULT_BUDGET
    divides = packer.divides
    lcm = packer.lcm

    basis: List[_Reducer] = []
    active: List[int] = []  # indices into basis usable for new pairs
    pairs: Dict[Tuple[int, int], Tuple[int, int]] = {}
    heap: List[Tuple[int, int, int, int]] = []

    def wdeg(m):
        return _wdeg(packer, weights, m)

    def add_element(poly: Dict[int, int], sugar: int):
        h = _Reducer(poly, sugar)
        hi = len(basis)
        basis.append(h)
        if budget.max_basis is not None and len(basis) > budget.max_basis:
            raise BudgetExceeded(f"intermediate basis exceeded {budget.max_basis} elements")
        hlm = h.lm
        # candidate pairs (g, h)
        cand = []
        for gi in active:
            g = basis[gi]
            cand.append((gi, lcm(g.lm, hlm), packer.coprime(g.lm, hlm)))
        kept = []
        while cand:
            item = cand.pop(0)
            gi, l, cop = item
            if cop or not (any(divides(l2, l) for _g, l2, _c in cand)
                           or any(divides(l2, l) for _g, l2, _c in kept)):
                kept.append(item)
        # chain criterion on existing pairs
        for key in list(pairs):
            i, j = key
            l = pairs[key][1]
            if divides(hlm, l):
                li = lcm(basis[i].lm, hlm)
                lj = lcm(basis[j].lm, hlm)
                if li != l and lj != l:
                    del pairs[key]
        for gi, l, cop in kept:
            if cop:
                continue  # product criterion
            g = basis[gi]
            wl = wdeg(l)
            sugar = max(g.sugar + wl - wdeg(g.lm), h.sugar + wl - wdeg(hlm))
            pairs[(gi, hi)] = (sugar, l)
            heapq.heappush(heap, (sugar, l, gi, hi))
        active[:] = [gi for gi in active if not divides(hlm, basis[gi].lm)]
        active.append(hi)

    def reducers():
        return [basis[i] for i in active]

    inputs = []
    for p in polys:
        if p:
            inputs.append((max(wdeg(m) for m in p), p))
    inputs.sort(key=lambda t: (t[0], max(t[1])))
    # feed inputs lazily in sugar order so reductions by low-degree elements come first
    pending_inputs = inputs
    processed = 0
    while heap or pending_inputs:
        budget.check_time()
        next_pair = None
        while heap:
            sugar, l, i, j = heap[0]
            if pairs.get((i, j)) is None:
                heapq.heappop(heap)
                continue
            next_pair = heap[0]
            break
        if next_pair is None and not pending_inputs:
            break
        use_input = bool(pending_inputs) and (next_pair is None or pending_inputs[0][0] <= next_pair[0])
        if use_input:
            sugar, f = pending_inputs.pop(0)
        else:
            sugar, l, i, j = heapq.heappop(heap)
            del pairs[(i, j)]
            gi, gj = basis[i], basis[j]
            qi, qj = l - gi.lm, l - gj.lm
            # S = lc_j * x^qi * g_i - lc_i * x^qj * g_j, with leading terms cancelling
            a, b = gj.lc, gi.lc
            g0 = gcd(a, b)
            a //= g0
            b //= g0
            f: Dict[int, int] = {}
            for m, c in gi.tail:
                f[m + qi] = a * c
            for m, c in gj.tail:
                mm = m + qj
                v = f.get(mm, 0) - b * c
                if v:
                    f[mm] = v
                else:
                    f.pop(mm, None)
        if stop_degree is not None and sugar > stop_degree:
            if use_input:
                continue
            break
        if budget.max_degree is not None and sugar > budget.max_degree:
            raise BudgetExceeded(f"S-pair sugar degree {sugar} exceeds cap {budget.max_degree}")
        processed += 1
        if not f:
            continue
        rem, _ = _reduce(f, reducers(), packer, full=True)
        if not rem:
            continue
        rem = _make_primitive(rem)
        add_element(rem, sugar)
        if stop_when is not None and stop_when(rem):
            break
    log.debug("buchberger: %d reductions, %d basis elements", processed, len(basis))
    return [basis[i].poly for i in active]


def _interreduce(polys: List[Dict[int, int]], packer: Packer) -> List[Dict[int, int]]:
    divides = packer.divides
    polys = sorted(polys, key=lambda f: max(f))
    minimal = []
    for f in polys:
        lm = max(f)
        if not any(divides(max(g), lm) for g in minimal):
            minimal.append(f)
    out = []
    for idx, f in enumerate(minimal):
        others = [_Reducer(g) for j, g in enumerate(minimal) if j != idx]
        lm = max(f)
        head = {lm: f[lm]}
        tail = {m: c for m, c in f.items() if m != lm}
        rem, mult = _reduce(tail, others, packer, full=True)
        # mult * tail == rem (mod ideal), so keep mult * head + rem
        if isinstance(mult, Fraction):
            num, den = mult.numerator, mult.denominator
            g = {m: c * num for m, c in head.items()}
            g.update({m: c * den for m, c in rem.items()})
        else:
            g = {m: c * mult for m, c in head.items()}
            g.update(rem)
        out.append(_make_primitive(g))
    out.sort(key=lambda f: max(f))
    return out


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder | None = None,
               budget: Optional[Budget] = None, weights=None) -> GroebnerBasis:
    """Reduced Gröbner basis of ``gens`` (zero generators are dropped)."""
    if not gens:
        raise ValueError("need at least one generator to fix the ring")
    ring = gens[0].ring
    for g in gens:
        if g.ring.variables != ring.variables:
            raise RingMismatch("generators live in different rings")
    order = order or ring.order
    ring = ring.with_order(order)
    key = ideal_hash(ring, gens, order)
    hit = _memo.get(key)
    if hit is not None:
        _memo.move_to_end(key)
        return hit
    packer = Packer(ring.nvars, order)
    basis = None
    if _disk_cache is not None:
        basis = _disk_cache.get_basis(key, ring)
    if basis is None:
        packed = [to_packed(g, packer) for g in gens if g]
        budget = budget or _active_budget or _DEFAULT_BUDGET
        raw = _buchberger_packed(packed, packer, weights=weights, budget=budget)
        red = _interreduce(raw, packer)
        basis = tuple(from_packed(f, packer, ring) for f in red)
        if _disk_cache is not None:
            _disk_cache.put_basis(key, ring, order, basis)
    gb = _finish(ring, order, basis, key, packer)
    _memo[key] = gb
    if len(_memo) > _MEMO_SIZE:
        _memo.popitem(last=False)
    return gb


def _finish(ring, order, basis, key, packer=None) -> GroebnerBasis:
    packer = packer or Packer(ring.nvars, order)
    reducers = tuple(_Reducer(to_packed(g, packer)) for g in basis)
    return GroebnerBasis(ring, order, tuple(basis), key, packer, reducers)


def from_basis(ring: RingSpec, order: MonomialOrder, basis: Sequence[Polynomial], key: str) -> GroebnerBasis:
    """Wrap an already reduced basis (e.g. loaded from cache)."""
    return _finish(ring.with_order(order), order, tuple(basis), key)


def normal_form(f: Polynomial, G: GroebnerBasis, order: MonomialOrder | None = None) -> Polynomial:
    """Remainder of ``f`` modulo ``G`` over the rationals."""
    if f.ring.variables != G.ring.variables:
        raise RingMismatch(f"{f.ring} vs {G.ring}")
    if order is not None and order != G.order:
        raise OrderMismatch(f"{order.name} vs {G.order.name}")
    if f.is_zero():
        return f
    packer = G._packer
    den = 1
    for c in f._terms.values():
        if type(c) is Fraction:
            den = den * c.denominator // gcd(den, c.denominator)
    pack = packer.pack
    fp = {pack(e): int(c * den) for e, c in f._terms.items()}
    rem, mult = _reduce(fp, G._reducers, packer, full=True)
    scale = Fraction(1, 1) / (Fraction(mult) * den)
    unpack = packer.unpack
    return Polynomial(f.ring, {unpack(m): c * scale for m, c in rem.items()})


def reduces_to_zero(f: Polynomial, G: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    rem, _ = _reduce(to_packed(f, G._packer), G._reducers, G._packer, full=False)
    return not rem


def is_member(f: Polynomial, gens) -> bool:
    """``f`` in the ideal generated by ``gens`` (a list or a GroebnerBasis)."""
    G = gens if isinstance(gens, GroebnerBasis) else buchberger(list(gens))
    if G.is_unit():
        return True
    return reduces_to_zero(f, G)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = tuple(max(a, b) for a, b in zip(lf, lg))
    mf = Polynomial.monomial(f.ring, [a - b for a, b in zip(l, lf)], Fraction(1) / f._terms[lf])
    mg = Polynomial.monomial(g.ring, [a - b for a, b in zip(l, lg)], Fraction(1) / g._terms[lg])
    return mf * f - mg * g


def check_groebner(G: GroebnerBasis) -> bool:
    """Every S-polynomial of the basis reduces to zero (Buchberger's criterion)."""
    basis = G.basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if not reduces_to_zero(s_polynomial(basis[i], basis[j], G.order), G):
                return False
    return True


def is_reduced(G: GroebnerBasis) -> bool:
    lms = G.leading_monomials
    for i, g in enumerate(G.basis):
        for e in g.monomials():
            for j, l in enumerate(lms):
                if j != i and all(a <= b for a, b in zip(l, e)):
                    return False
    return True


def eliminate(gens: Sequence[Polynomial], elim_count: int, order: MonomialOrder | None = None,
              budget: Optional[Budget] = None, weights=None) -> List[Polynomial]:
    """Basis elements free of the first ``elim_count`` variables."""
    if not gens:
        return []
    ring = gens[0].ring
    order = order or (ring.order if ring.order.kind != "grevlex" else MonomialOrder("block", elim_count))
    if not order.is_elimination_for(elim_count, ring.nvars):
        raise BadOrder(f"{order.name} does not eliminate the first {elim_count} variables")
    G = buchberger(list(gens), order, budget=budget, weights=weights)
    return [g for g in G.basis if not any(any(e[:elim_count]) for e in g.monomials())]


def truncated_basis(gens: Sequence[Polynomial], degree: int,
                    order: MonomialOrder | None = None) -> GroebnerBasis:
    """Gröbner basis correct through ``degree`` for homogeneous ``gens``.

    Pairs and inputs of larger degree are never processed, so normal forms of
    forms of degree <= ``degree`` are exact; beyond that nothing is promised.
    """
    ring = gens[0].ring
    order = order or GREVLEX_ORDER
    ring = ring.with_order(order)
    key = ideal_hash(ring, gens, order) + f":trunc{degree}"
    hit = _memo.get(key)
    if hit is not None:
        return hit
    packer = Packer(ring.nvars, order)
    packed = [to_packed(g, packer) for g in gens if g]
    budget = _active_budget or _DEFAULT_BUDGET
    raw = _buchberger_packed(packed, packer, budget=budget, stop_degree=degree)
    red = _interreduce(raw, packer) if raw else []
    basis = tuple(from_packed(f, packer, ring) for f in red)
    gb = _finish(ring, order, basis, key, packer)
    _memo[key] = gb
    if len(_memo) > _MEMO_SIZE:
        _memo.popitem(last=False)
    return gb
