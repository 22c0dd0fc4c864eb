"""Ideal-level algebra: sums, products, powers and intersections."""
from __future__ import annotations

from itertools import combinations_with_replacement
from typing import FrozenSet, Iterable, List, Optional, Sequence

from . import groebner
from .errors import RingMismatch
from .polyring import GREVLEX, MonomialOrder, Polynomial, RingSpec


class Ideal:
    """An ideal given by generators, with a lazily computed reduced basis.

    ``tags`` may contain ``"monomial"`` (every generator is a monomial) and
    ``"linear-prime"`` (generated by a subset of the variables).
    """

    __slots__ = ("ring", "gens", "tags", "name", "_gb")

    def __init__(self, ring: RingSpec, gens: Iterable[Polynomial], tags: Iterable[str] = (), name: str = ""):
        seen = set()
        clean = []
        for g in gens:
            if g.ring.variables != ring.variables:
                raise RingMismatch(f"generator {g} not in ring {ring}")
            if g.is_zero():
                continue
            g = g.primitive().with_ring(ring)
            if g not in seen:
                seen.add(g)
                clean.append(g)
        self.ring = ring
        self.gens = tuple(clean)
        tags = set(tags)
        if clean and all(g.is_monomial() for g in clean):
            tags.add("monomial")
        self.tags: FrozenSet[str] = frozenset(tags)
        self.name = name
        self._gb = None

    @classmethod
    def of(cls, gens: Sequence[Polynomial], name: str = "", tags=()) -> "Ideal":
        return cls(gens[0].ring, gens, tags=tags, name=name)

    @classmethod
    def variables(cls, ring: RingSpec, names: Sequence[str], name: str = "") -> "Ideal":
        gens = [Polynomial.var(ring, v) for v in names]
        return cls(ring, gens, tags=("linear-prime",), name=name or f"({','.join(names)})")

    @classmethod
    def maximal(cls, ring: RingSpec) -> "Ideal":
        return cls.variables(ring, ring.variables, name="m")

    @property
    def is_monomial(self) -> bool:
        return "monomial" in self.tags

    def gb(self, order: Optional[MonomialOrder] = None) -> groebner.GroebnerBasis:
        order = order or GREVLEX
        if order == GREVLEX:
            if self._gb is None:
                self._gb = groebner.buchberger(list(self.gens), GREVLEX)
            return self._gb
        return groebner.buchberger(list(self.gens), order)

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if not self.gens:
            return False
        if self.is_monomial:
            return monomial_membership(f, self)
        return groebner.is_member(f, self.gb())

    def is_zero(self) -> bool:
        return not self.gens

    def max_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        label = self.name or f"{len(self.gens)} gens"
        return f"Ideal<{label}>"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring.variables != J.ring.variables:
        raise RingMismatch(f"{I.ring} vs {J.ring}")


def _monomial_exps(I: Ideal) -> List[tuple]:
    return [next(iter(g.monomials())) for g in I.gens]


def _divides(a, b) -> bool:
    return all(i <= j for i, j in zip(a, b))


def minimalize_monomials(exps: Iterable[tuple]) -> List[tuple]:
    """Minimal monomial generators (no one divides another), ascending by degree."""
    uniq = sorted(set(exps), key=lambda e: (sum(e), tuple(-v for v in e)))
    out: List[tuple] = []
    for e in uniq:
        if not any(_divides(k, e) for k in out):
            out.append(e)
    return out


def _monomial_ideal(ring: RingSpec, exps: Iterable[tuple], name="") -> Ideal:
    return Ideal(ring, [Polynomial._raw(ring, {e: 1}) for e in minimalize_monomials(exps)],
                 tags=("monomial",), name=name)


def monomial_membership(f: Polynomial, I: Ideal) -> bool:
    """For monomial ``I``: every term of ``f`` is divisible by some generator."""
    gens = _monomial_exps(I)
    return all(any(_divides(g, e) for g in gens) for e in f.monomials())


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, I.gens + J.gens)


def product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    if I.is_monomial and J.is_monomial:
        return _monomial_ideal(I.ring, (tuple(a + b for a, b in zip(e, f))
                                        for e in _monomial_exps(I) for f in _monomial_exps(J)))
    return Ideal(I.ring, [f * g for f in I.gens for g in J.gens])


def _degree_monomials(n: int, k: int):
    if n == 1:
        yield (k,)
        return
    for i in range(k, -1, -1):
        for rest in _degree_monomials(n - 1, k - i):
            yield (i,) + rest


def maximal_power(ring: RingSpec, k: int) -> Ideal:
    """The k-th power of the maximal homogeneous ideal: all degree-k monomials."""
    return Ideal(ring, [Polynomial._raw(ring, {e: 1}) for e in _degree_monomials(ring.nvars, k)],
                 tags=("monomial",), name=f"m^{k}")


def power(I: Ideal, k: int) -> Ideal:
    """k-th ordinary power; linear primes and monomial ideals take a fast path."""
    if k < 1:
        raise ValueError("power needs k >= 1")
    if k == 1:
        return I
    ring = I.ring
    name = f"{I.name}^{k}" if I.name else ""
    if "linear-prime" in I.tags:
        idx = [next(i for i, v in enumerate(next(iter(g.monomials()))) if v) for g in I.gens]
        if len(idx) == ring.nvars:
            return maximal_power(ring, k)
        exps = []
        for combo in _degree_monomials(len(idx), k):
            e = [0] * ring.nvars
            for i, v in zip(idx, combo):
                e[i] = v
            exps.append(tuple(e))
        return Ideal(ring, [Polynomial._raw(ring, {e: 1}) for e in exps], tags=("monomial",), name=name)
    if I.is_monomial:
        gens = _monomial_exps(I)
        out = []
        for combo in combinations_with_replacement(range(len(gens)), k):
            e = [0] * ring.nvars
            for c in combo:
                for i, v in enumerate(gens[c]):
                    e[i] += v
            out.append(tuple(e))
        return _monomial_ideal(ring, out, name=name)
    gens = list(I.gens)
    out = []
    for combo in combinations_with_replacement(range(len(gens)), k):
        p = Polynomial.const(ring, 1)
        for c in combo:
            p = p * gens[c]
        out.append(p)
    return Ideal(ring, out, name=name)


def intersect(I: Ideal, J: Ideal, budget: Optional[groebner.Budget] = None) -> Ideal:
    """I ∩ J; monomial pairs use lcms, everything else eliminates an auxiliary t."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_monomial and J.is_monomial:
        return _monomial_ideal(ring, (tuple(max(a, b) for a, b in zip(e, f))
                                      for e in _monomial_exps(I) for f in _monomial_exps(J)))
    aux = _aux_name(ring)
    order = MonomialOrder("block", 1)
    ext = RingSpec((aux,) + ring.variables, order)
    t = Polynomial.var(ext, 0)
    one_minus_t = Polynomial.const(ext, 1) - t
    gens = [t * g.embed(ext, 1) for g in I.gens] + [one_minus_t * g.embed(ext, 1) for g in J.gens]
    weights = (0,) + (1,) * ring.nvars
    free = groebner.eliminate(gens, 1, order, budget=budget, weights=weights)
    result = [g.drop_leading(ring, 1) for g in free]
    if all(g.is_homogeneous() for g in result):
        from .hilbert import minimal_generators

        result = minimal_generators(Ideal(ring, result), assume_gb=True)
    return Ideal(ring, result)


def _aux_name(ring: RingSpec) -> str:
    name = "t"
    while name in ring.variables:
        name += "_"
    return name


def _fold_key(I: Ideal):
    return (len(I.gens), I.max_degree())


def intersect_many(ideals: Sequence[Ideal], budget: Optional[groebner.Budget] = None) -> Ideal:
    """Left fold of :func:`intersect`, smallest ideals first (a speed heuristic)."""
    if not ideals:
        raise ValueError("need at least one ideal")
    for J in ideals[1:]:
        _same_ring(ideals[0], J)
    # monomial components are folded together first: their intersection is exact and cheap
    mono = sorted((I for I in ideals if I.is_monomial), key=_fold_key)
    rest = sorted((I for I in ideals if not I.is_monomial), key=_fold_key)
    acc = None
    for I in mono + rest:
        acc = I if acc is None else intersect(acc, I, budget=budget)
    return acc


def equal_as_ideals(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    return I.gb().basis == J.gb().basis


def contained_in(I: Ideal, J: Ideal) -> bool:
    """Every generator of I lies in J."""
    return all(J.contains(g) for g in I.gens)
