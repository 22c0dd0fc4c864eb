"""Exact multivariate polynomials over the rationals.

Monomials are dense exponent tuples, coefficients are ``int`` (when integral)
or :class:`fractions.Fraction`.  Every value here is immutable once built.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .errors import NotSquare, RingMismatch, ShapeMismatch

Exps = Tuple[int, ...]
NEG_INF = float("-inf")

_IDENT = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")


def _grevlex_key(e: Sequence[int]) -> tuple:
    return (sum(e),) + tuple(-v for v in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    """lex, grevlex, or a two-block order (grevlex on each block).

    ``block`` compares the first ``elim_count`` exponents by grevlex and only
    breaks ties with grevlex on the remaining ones, so it eliminates the
    leading block.
    """

    kind: str = "grevlex"
    elim_count: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.elim_count < 1:
            raise ValueError("block order needs elim_count >= 1")

    @property
    def name(self) -> str:
        if self.kind == "block":
            return f"block{self.elim_count}"
        return self.kind

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        if name.startswith("block"):
            return cls("block", int(name[5:]))
        return cls(name)

    def key(self, e: Sequence[int]) -> tuple:
        """Sort key: ``key(a) > key(b)`` iff ``a > b`` in this order."""
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return tuple(e)
        k = self.elim_count
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])

    def is_elimination_for(self, count: int, nvars: int) -> bool:
        if self.kind == "lex":
            return True
        if self.kind == "block":
            return self.elim_count == count
        return count == 0


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class RingSpec:
    """Ordered variable list plus the active monomial order."""

    variables: Tuple[str, ...]
    order: MonomialOrder = field(default=GREVLEX)

    def __post_init__(self):
        vs = tuple(self.variables)
        object.__setattr__(self, "variables", vs)
        if not vs:
            raise ValueError("a ring needs at least one variable")
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variables in {vs}")
        for v in vs:
            if not _IDENT.match(v):
                raise ValueError(f"bad variable name {v!r}")

    @classmethod
    def of(cls, names: str | Iterable[str], order: MonomialOrder = GREVLEX) -> "RingSpec":
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        return cls(tuple(names), order)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def with_order(self, order: MonomialOrder) -> "RingSpec":
        return RingSpec(self.variables, order)

    def gens(self) -> List["Polynomial"]:
        return [Polynomial.var(self, i) for i in range(self.nvars)]

    def __str__(self):
        return " ".join(self.variables)


def _norm(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    """Immutable sparse polynomial: a map from exponent tuples to coefficients."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingSpec, terms: Mapping[Exps, object] | None = None):
        self.ring = ring
        clean: Dict[Exps, object] = {}
        if terms:
            n = ring.nvars
            for e, c in terms.items():
                if c:
                    if len(e) != n:
                        raise RingMismatch(f"exponent {e} does not fit ring {ring}")
                    clean[tuple(e)] = _norm(c if isinstance(c, (int, Fraction)) else Fraction(c))
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: RingSpec, terms: Dict[Exps, object]) -> "Polynomial":
        # trusted constructor: terms already normalized, no zeros
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        p._hash = None
        return p

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ring: RingSpec) -> "Polynomial":
        return cls._raw(ring, {})

    @classmethod
    def const(cls, ring: RingSpec, c) -> "Polynomial":
        return cls(ring, {(0,) * ring.nvars: c})

    @classmethod
    def var(cls, ring: RingSpec, which) -> "Polynomial":
        i = ring.index(which) if isinstance(which, str) else which
        e = [0] * ring.nvars
        e[i] = 1
        return cls._raw(ring, {tuple(e): 1})

    @classmethod
    def monomial(cls, ring: RingSpec, exps: Sequence[int], c=1) -> "Polynomial":
        return cls(ring, {tuple(exps): c})

    # -- inspection ------------------------------------------------------
    @property
    def nterms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def items(self):
        return self._terms.items()

    def coeff(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), 0)

    def monomials(self):
        return self._terms.keys()

    def terms(self, order: MonomialOrder | None = None) -> List[Tuple[object, Exps]]:
        """(coefficient, exponents) pairs, strictly descending in ``order``."""
        key = (order or self.ring.order).key
        return [(self._terms[e], e) for e in sorted(self._terms, key=key, reverse=True)]

    def leading_monomial(self, order: MonomialOrder | None = None) -> Exps:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=(order or self.ring.order).key)

    def leading_coefficient(self, order: MonomialOrder | None = None):
        return self._terms[self.leading_monomial(order)]

    def degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def min_degree(self):
        if not self._terms:
            return NEG_INF
        return min(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, k in zip(point, e):
                if k:
                    t = t * v ** k
            total += t
        return _norm(total) if isinstance(total, Fraction) else total

    def content(self) -> Fraction:
        """Positive rational c with ``self / c`` primitive over the integers."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            if type(c) is Fraction:
                num = gcd(num, c.numerator)
                den = den * c.denominator // gcd(den, c.denominator)
            else:
                num = gcd(num, c)
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        """Integer coefficients, content 1, positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_coefficient() < 0:
            c = -c
        return self.scale(1 / c)

    def scale(self, c) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.ring)
        if c == 1:
            return self
        return Polynomial._raw(self.ring, {e: _norm(v * c) for e, v in self._terms.items()})

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self._terms.items() if sum(e) == d})

    def embed(self, ring: RingSpec, shift: int = 0) -> "Polynomial":
        """Re-home into ``ring`` whose variables are ours with ``shift`` new leading ones."""
        if ring.nvars != self.ring.nvars + shift:
            raise RingMismatch("target ring has the wrong number of variables")
        pad = (0,) * shift
        return Polynomial._raw(ring, {pad + e: c for e, c in self._terms.items()})

    def drop_leading(self, ring: RingSpec, count: int) -> "Polynomial":
        """Inverse of :meth:`embed` for polynomials free of the first ``count`` variables."""
        out = {}
        for e, c in self._terms.items():
            if any(e[:count]):
                raise ValueError("polynomial involves eliminated variables")
            out[e[count:]] = c
        return Polynomial._raw(ring, out)

    def with_ring(self, ring: RingSpec) -> "Polynomial":
        if ring.variables != self.ring.variables:
            raise RingMismatch(f"{ring} vs {self.ring}")
        return Polynomial._raw(ring, self._terms)

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring.variables != other.ring.variables:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = _norm(v + c)
                if v:
                    out[e] = v
                else:
                    del out[e]
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: Dict[Exps, object] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([i + j for i, j in zip(ea, eb)])
                v = get(e)
                out[e] = ca * cb if v is None else v + ca * cb
        return Polynomial._raw(self.ring, {e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.const(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.variables == other.ring.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(self.ring, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        from .polyexpr import print_poly

        return f"Polynomial({print_poly(self)!r})"

    def __str__(self):
        from .polyexpr import print_poly

        return print_poly(self)


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def pow(p: Polynomial, k: int) -> Polynomial:  # noqa: A001 - mirrors the operator name
    return p ** k


def degree(p: Polynomial):
    return p.degree()


def is_homogeneous(p: Polynomial) -> bool:
    return p.is_homogeneous()


def product(polys: Iterable[Polynomial], ring: RingSpec) -> Polynomial:
    out = Polynomial.const(ring, 1)
    for p in polys:
        out = out * p
    return out


# -- matrices ----------------------------------------------------------------

class PolyMatrix:
    """Row-major matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring: RingSpec, rows: int, cols: int, entries: Sequence[Polynomial]):
        if rows < 1 or cols < 1:
            raise ShapeMismatch("matrix dimensions must be positive")
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, ring: RingSpec, rows: Sequence[Sequence]) -> "PolyMatrix":
        flat = []
        for row in rows:
            for x in row:
                flat.append(x if isinstance(x, Polynomial) else Polynomial.const(ring, x))
        return cls(ring, len(rows), len(rows[0]), flat)

    @classmethod
    def identity(cls, ring: RingSpec, n: int) -> "PolyMatrix":
        return cls.from_rows(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def delete_row(self, i: int) -> "PolyMatrix":
        rows = [self.row(r) for r in range(self.rows) if r != i]
        return PolyMatrix.from_rows(self.ring, rows)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and (self.rows, self.cols) == (other.rows, other.cols)
                and self.entries == other.entries)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in self.row(i)) for i in range(self.rows))
        return f"PolyMatrix[{body}]"


def mat_mul(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix:
    if A.cols != B.rows:
        raise ShapeMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    if A.ring.variables != B.ring.variables:
        raise RingMismatch("matrices live in different rings")
    zero = Polynomial.zero(A.ring)
    out = []
    for i in range(A.rows):
        for j in range(B.cols):
            acc = zero
            for k in range(A.cols):
                a, b = A[i, k], B[k, j]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
    return PolyMatrix(A.ring, A.rows, B.cols, out)


def det(M: PolyMatrix) -> Polynomial:
    """Determinant by Laplace expansion along rows, memoized on column subsets."""
    if M.rows != M.cols:
        raise NotSquare(f"{M.rows}x{M.cols} matrix has no determinant")
    n = M.rows
    memo: Dict[int, Polynomial] = {}
    zero = Polynomial.zero(M.ring)

    def minor(row: int, mask: int) -> Polynomial:
        # determinant of rows row..n-1 restricted to the columns set in mask
        if row == n:
            return Polynomial.const(M.ring, 1)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        acc = zero
        sign = 1
        for j in range(n):
            if mask >> j & 1:
                a = M[row, j]
                if a:
                    sub = minor(row + 1, mask & ~(1 << j))
                    if sub:
                        term = a * sub
                        acc = acc + term if sign > 0 else acc - term
                sign = -sign
        memo[mask] = acc
        return acc

    return minor(0, (1 << n) - 1)


def det_bruteforce(M: PolyMatrix) -> Polynomial:
    """Leibniz permutation sum; the oracle for :func:`det` in tests."""
    if M.rows != M.cols:
        raise NotSquare("not square")
    n = M.rows
    acc = Polynomial.zero(M.ring)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.const(M.ring, -1 if inv % 2 else 1)
        for i in range(n):
            term = term * M[i, perm[i]]
            if not term:
                break
        acc = acc + term
    return acc
