"""Exact sparse row reduction over the integers (fraction-free, content-normalized).

Vectors are dicts ``{column: int}``; columns must be mutually comparable.
A semi-echelon form (every stored row has a distinct largest column) is all
rank, membership and subspace-intersection computations need.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Hashable, Iterable, List, Optional

Vector = Dict[Hashable, int]


def integral(vec: Dict[Hashable, object]) -> Vector:
    """Scale a rational vector to a primitive integer one."""
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    out = {k: int(c * den) for k, c in vec.items() if c}
    return _primitive(out)


def _primitive(v: Vector) -> Vector:
    g = 0
    for c in v.values():
        g = gcd(g, c)
        if g == 1:
            return v
    if g > 1:
        return {k: c // g for k, c in v.items()}
    return v


class Echelon:
    """Incrementally maintained semi-echelon basis of a subspace."""

    def __init__(self):
        self.rows: Dict[Hashable, Vector] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vector, full: bool = False) -> Vector:
        """Remainder of ``vec`` after eliminating stored pivots (up to a scalar)."""
        v = dict(vec)
        rows = self.rows
        done: Vector = {}
        while v:
            c = max(v)
            row = rows.get(c)
            if row is None:
                if not full:
                    done.update(v)
                    break
                done[c] = v.pop(c)
                continue
            a, b = row[c], v[c]
            g = gcd(a, b)
            a //= g
            b //= g
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for k in v:
                    v[k] *= a
                for k in done:
                    done[k] *= a
            for k, rc in row.items():
                nv = v.get(k, 0) - b * rc
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        return _primitive(done)

    def add(self, vec: Vector) -> Optional[Vector]:
        """Insert ``vec``; returns the new row, or ``None`` if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        self.rows[max(r)] = r
        return r

    def extend(self, vecs: Iterable[Vector]) -> int:
        return sum(1 for v in vecs if self.add(v) is not None)

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)


def rank(vecs: Iterable[Vector]) -> int:
    E = Echelon()
    E.extend(vecs)
    return E.rank


def split_span(vecs: Iterable[Vector], is_bad) -> List[Vector]:
    """Basis of ``span(vecs) ∩ {v : v[c] == 0 for every c with is_bad(c)}``.

    Bad columns are ordered above every good one, so after echelonizing, the
    rows led by a good column are exactly a basis of the intersection.
    """
    E = Echelon()
    for v in vecs:
        E.add({(1 if is_bad(c) else 0, c): x for c, x in v.items()})
    return [{c: x for (_flag, c), x in row.items()} for (flag, _), row in E.rows.items() if flag == 0]


def intersect_spans(U: Iterable[Vector], W: Iterable[Vector]) -> List[Vector]:
    """Basis of ``span(U) ∩ span(W)``."""
    EW = Echelon()
    EW.extend(W)
    if not EW.rows:
        return []
    aug = []
    for u in U:
        # pair each u with its remainder modulo W, at a common scale
        v = {("u", c): x for c, x in u.items()}
        rem = _reduce_scaled(EW, u)
        scale, r = rem
        if scale != 1:
            v = {k: x * scale for k, x in v.items()}
        v.update({("r", c): x for c, x in r.items()})
        aug.append(v)
    return [{c: x for (_tag, c), x in row.items()} for row in split_span(aug, lambda k: k[0] == "r")]


def _reduce_scaled(E: Echelon, vec: Vector):
    """Full reduction returning (multiplier, remainder) with remainder == multiplier*vec mod E."""
    v = dict(vec)
    rows = E.rows
    done: Vector = {}
    mult = 1
    while v:
        c = max(v)
        row = rows.get(c)
        if row is None:
            done[c] = v.pop(c)
            continue
        a, b = row[c], v[c]
        g = gcd(a, b)
        a //= g
        b //= g
        if a < 0:
            a, b = -a, -b
        if a != 1:
            mult *= a
            for k in v:
                v[k] *= a
            for k in done:
                done[k] *= a
        for k, rc in row.items():
            nv = v.get(k, 0) - b * rc
            if nv:
                v[k] = nv
            else:
                v.pop(k, None)
    return mult, done
