"""Named ideals: Fermat-like line configurations in P^3 and the A3/B3 point arrangements in P^2.

Config ids: ``fermat_like:<n>`` (n >= 3), ``a3``, ``b3:<n>`` (n >= 1).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import BadParameter, NoWitnessKnown
from .idealops import Ideal
from .polyexpr import parse_poly
from .polyring import Polynomial, RingSpec

RING4 = RingSpec.of("x y z w")
RING3 = RingSpec.of("x y z")


@dataclass(frozen=True)
class Member:
    id: str
    reducer_count: int


@dataclass(frozen=True)
class Reducer:
    id: str
    member_ids: Tuple[str, ...]
    degree: int = 1


@dataclass(frozen=True)
class IncidenceConfig:
    """Members (lines or points) versus the linear forms (planes or lines) through them."""

    name: str
    members: Tuple[Member, ...]
    reducers: Tuple[Reducer, ...]

    @property
    def sizes(self) -> List[int]:
        return [len(r.member_ids) for r in self.reducers]

    @property
    def e_profile(self) -> List[int]:
        return sorted((m.reducer_count for m in self.members), reverse=True)

    def member_index(self) -> Dict[str, int]:
        return {m.id: i for i, m in enumerate(self.members)}

    def double_count_ok(self) -> bool:
        counts = {m.id: 0 for m in self.members}
        for r in self.reducers:
            for mid in r.member_ids:
                counts[mid] += 1
        return (sum(self.sizes) == sum(m.reducer_count for m in self.members)
                and all(counts[m.id] == m.reducer_count for m in self.members))

    def to_json(self) -> dict:
        return {"name": self.name,
                "members": [{"id": m.id, "e": m.reducer_count} for m in self.members],
                "reducers": [{"id": r.id, "degree": r.degree, "members": list(r.member_ids)}
                             for r in self.reducers]}

    @classmethod
    def from_json(cls, obj: dict) -> "IncidenceConfig":
        return cls(obj["name"],
                   tuple(Member(m["id"], m["e"]) for m in obj["members"]),
                   tuple(Reducer(r["id"], tuple(r["members"]), r.get("degree", 1)) for r in obj["reducers"]))


def _build_incidence(name: str, reducer_members: Dict[str, List[str]], member_order: Sequence[str]) -> IncidenceConfig:
    counts = {m: 0 for m in member_order}
    for mids in reducer_members.values():
        for m in mids:
            counts[m] += 1
    members = tuple(Member(m, counts[m]) for m in member_order)
    reducers = tuple(Reducer(r, tuple(mids)) for r, mids in reducer_members.items())
    return IncidenceConfig(name, members, reducers)


def _fermat_like_incidence(n: int) -> IncidenceConfig:
    # plane (u, v, c) is u = eps^c v for a primitive n-th root of unity eps; exponents live mod n
    pairs = ["xy", "zw", "xz", "yw", "xw", "yz"]
    planes = {f"{u}-{v}:{c}": [] for u, v in pairs for c in range(n)}
    lines = []

    def add(line, *plane_ids):
        lines.append(line)
        for p in plane_ids:
            planes[p].append(line)

    for u, v in pairs:
        add(f"({u},{v})", *(f"{u}-{v}:{c}" for c in range(n)))
    for a in range(n):
        for b in range(n):
            add(f"L1[{a},{b}]", f"x-y:{a}", f"x-z:{b}", f"y-z:{(b - a) % n}")
            add(f"L2[{a},{b}]", f"x-y:{a}", f"y-w:{b}", f"x-w:{(a + b) % n}")
            add(f"L3[{a},{b}]", f"z-w:{a}", f"x-z:{b}", f"x-w:{(a + b) % n}")
            add(f"L4[{a},{b}]", f"z-w:{a}", f"y-w:{b}", f"y-z:{(b - a) % n}")
    return _build_incidence(f"fermat_like:{n}", planes, lines)


def _b3_incidence(n: int, name: str) -> IncidenceConfig:
    # lines x=0, y=0, z=0 and x = eps^a y, y = eps^b z, z = eps^c x
    lines: Dict[str, List[str]] = {"x=0": [], "y=0": [], "z=0": []}
    for c in range(n):
        lines[f"x-y:{c}"] = []
        lines[f"y-z:{c}"] = []
        lines[f"z-x:{c}"] = []
    points = []

    def add(pt, *line_ids):
        points.append(pt)
        for l in line_ids:
            lines[l].append(pt)

    add("[1:0:0]", "y=0", "z=0", *(f"y-z:{c}" for c in range(n)))
    add("[0:1:0]", "x=0", "z=0", *(f"z-x:{c}" for c in range(n)))
    add("[0:0:1]", "x=0", "y=0", *(f"x-y:{c}" for c in range(n)))
    for a in range(n):
        for b in range(n):
            add(f"F[{a},{b}]", f"x-y:{a}", f"y-z:{b}", f"z-x:{(-a - b) % n}")
    for c in range(n):
        add(f"X[{c}]", "x=0", f"y-z:{c}")
        add(f"Y[{c}]", "y=0", f"z-x:{c}")
        add(f"Z[{c}]", "z=0", f"x-y:{c}")
    return _build_incidence(name, lines, points)


@dataclass
class NamedIdeal:
    """A catalog entry with its radical decomposition and incidence data."""

    id: str
    ring: RingSpec
    gens: List[Polynomial]
    components: List[Ideal]
    incidence: IncidenceConfig
    big_height: int = 2
    ci_component: Optional[Ideal] = None
    alt_components: Optional[List[Ideal]] = None
    notes: str = ""
    params: Dict[str, int] = field(default_factory=dict)

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.gens, name=self.id)

    @property
    def family(self) -> str:
        return self.id.split(":")[0]


def parse_config_id(config_id: str) -> Tuple[str, Optional[int]]:
    name, _, arg = config_id.partition(":")
    if name == "a3":
        if arg:
            raise BadParameter("a3 takes no parameter")
        return "a3", None
    if name in ("fermat_like", "b3", "b3_family"):
        try:
            n = int(arg)
        except ValueError:
            raise BadParameter(f"{config_id!r}: expected {name}:<n>") from None
        name = "b3" if name == "b3_family" else name
        if name == "fermat_like" and n < 3:
            raise BadParameter("fermat_like needs n >= 3")
        if name == "b3" and n < 1:
            raise BadParameter("b3 needs n >= 1")
        return name, n
    raise BadParameter(f"unknown config {config_id!r}")


def _p(src: str, ring: RingSpec, **subs) -> Polynomial:
    return parse_poly(src.format(**subs), ring)


def special_forms(config_id: str) -> Dict[str, Polynomial]:
    """f, g, h and F = f*g*h for ``fermat_like:<n>``."""
    name, n = parse_config_id(config_id)
    if name != "fermat_like":
        raise BadParameter("special forms exist only for fermat_like configs")
    return dict(_fermat_forms(n))


@lru_cache(maxsize=None)
def _fermat_forms(n: int):
    R = RING4
    f = _p("(x^{n}-y^{n})*(z^{n}-w^{n})", R, n=n)
    g = _p("(x^{n}-z^{n})*(y^{n}-w^{n})", R, n=n)
    h = _p("(x^{n}-w^{n})*(y^{n}-z^{n})", R, n=n)
    return (("f", f), ("g", g), ("h", h), ("F", f * g * h))


def _lin(ring: RingSpec, a: str, b: str) -> Ideal:
    return Ideal.variables(ring, [a, b])


def _K_prime_1(R: RingSpec) -> Ideal:
    return Ideal(R, [_p("(y-z)*(y+z-x)", R), _p("(x-y)*(x+y-z)", R)], name="K'1")


@lru_cache(maxsize=None)
def build(config_id: str) -> NamedIdeal:
    name, n = parse_config_id(config_id)
    if name == "fermat_like":
        R = RING4
        forms = dict(_fermat_forms(n))
        f, g, h = forms["f"], forms["g"], forms["h"]
        v = {s: Polynomial.var(R, s) for s in R.variables}
        x, y, z, w = v["x"], v["y"], v["z"], v["w"]
        gens = [f * x * y, f * z * w, g * x * z, g * y * w, h * x * w, h * y * z]
        K = Ideal(R, [f, g], name=f"K{n}")
        lin = [_lin(R, a, b) for a, b in ("xy", "xz", "xw", "yz", "yw", "zw")]
        return NamedIdeal(config_id, R, gens, [K] + lin, _fermat_like_incidence(n), ci_component=K,
                          params={"n": n})
    R = RING3
    if name == "a3":
        gens = [_p("y*z*(y-z)", R), _p("z*x*(z-x)", R), _p("x*y*(x-y)", R)]
        K = _K_prime_1(R)
        lin = [_lin(R, "x", "y"), _lin(R, "y", "z"), _lin(R, "z", "x")]
        inc = _b3_incidence(1, "a3")
        return NamedIdeal("a3", R, gens, [K] + lin, inc, ci_component=K)
    gens = [_p("y*z*(y^{n}-z^{n})", R, n=n), _p("z*x*(z^{n}-x^{n})", R, n=n), _p("x*y*(x^{n}-y^{n})", R, n=n)]
    K1 = Ideal(R, [_p("x", R), _p("y^{n}-z^{n}", R, n=n)], name="K1")
    K2 = Ideal(R, [_p("y", R), _p("z^{n}-x^{n}", R, n=n)], name="K2")
    K3 = Ideal(R, [_p("z", R), _p("x^{n}-y^{n}", R, n=n)], name="K3")
    K = Ideal(R, [_p("x^{n}-y^{n}", R, n=n), _p("y^{n}-z^{n}", R, n=n)], name="K")
    lin = [_lin(R, "x", "y"), _lin(R, "y", "z"), _lin(R, "z", "x")]
    alt = None
    if n == 2:
        K2p = Ideal(R, [_p("x+y+z", R), _p("y*z*(y+z)", R)], name="K'2")
        alt = [_K_prime_1(R), K2p, K] + lin
    return NamedIdeal(f"b3:{n}", R, gens, [K1, K2, K3, K] + lin, _b3_incidence(n, f"b3:{n}"),
                      ci_component=K, alt_components=alt, params={"n": n})


def incidence(config_id: str) -> IncidenceConfig:
    return build(config_id).incidence


# -- witnesses ---------------------------------------------------------------

@dataclass(frozen=True)
class WitnessEntry:
    """A factored form claimed to lie in the m-th symbolic power."""

    config: str
    m: int
    label: str
    factors: Tuple[Tuple[Polynomial, int], ...]
    claimed_degree: int
    source: str

    @property
    def polynomial(self) -> Polynomial:
        ring = self.factors[0][0].ring
        out = Polynomial.const(ring, 1)
        for p, k in self.factors:
            if k:
                out = out * p ** k
        return out

    @property
    def factored_degree(self) -> int:
        return sum(p.degree() * k for p, k in self.factors)

    def describe(self) -> str:
        parts = []
        for p, k in self.factors:
            if k == 0:
                continue
            s = f"({p})"
            parts.append(s if k == 1 else f"{s}^{k}")
        return "*".join(parts)


def _fermat_witnesses(n: int, m: int) -> List[WitnessEntry]:
    forms = dict(_fermat_forms(n))
    f, g, h, F = forms["f"], forms["g"], forms["h"], forms["F"]
    R = RING4
    v = {s: Polynomial.var(R, s) for s in R.variables}
    cid = f"fermat_like:{n}"
    out = []
    if m % 3 == 0:
        k = m // 3
        out.append(WitnessEntry(cid, m, "F^k", ((F, k),), 6 * n * k, "F_n^k in the 3k-th symbolic power"))
    if 4 <= m <= n:
        j = m - 3
        for i in range(j + 1):
            out.append(WitnessEntry(cid, m, f"fgh*f^{i}g^{j - i}", ((f, 1 + i), (g, 1 + j - i), (h, 1)),
                                    2 * n * m, "f g h (f,g)^(m-3) for 3 <= m <= n"))
    if m > n:
        # j == 0 means m == 3k, already covered by F^k
        k = -(-m // n)
        a = k * n - m
        j = k * (n - 3) - a
        if k >= 2 and j > 0:
            picks = [0, j] if j else [0]
            for i in picks:
                out.append(WitnessEntry(cid, m, f"(fgh)^{k}*f^{i}g^{j - i}",
                                        ((f, k + i), (g, k + j - i), (h, k)),
                                        2 * n * m, "(f g h)^k (f,g)^(k(n-3)-a) for m = kn - a"))
    if n == 4 and m == 5:
        out.append(WitnessEntry(cid, 5, "yz*f*g^2*h^2", ((v["y"], 1), (v["z"], 1), (f, 1), (g, 2), (h, 2)),
                                42, "y z f g^2 h^2 in the 5th symbolic power for n = 4"))
    # k >= 1 only: at m = 1, 2 these reduce to a generator and to f g xyzw,
    # and the m = 2 value is left to the ordinary-power bound
    if n == 3 and m % 3 == 1 and m > 3:
        k = m // 3
        out.append(WitnessEntry(cid, m, "f^k g^k h^(k+1) yz",
                                ((f, k), (g, k), (h, k + 1), (v["y"], 1), (v["z"], 1)),
                                18 * k + 8, "f^k g^k h^(k+1) y z for m = 3k+1"))
    if n == 3 and m % 3 == 2 and m > 3:
        k = m // 3
        out.append(WitnessEntry(cid, m, "f^(k+1) g^(k+1) h^k xyzw",
                                ((f, k + 1), (g, k + 1), (h, k), (v["x"], 1), (v["y"], 1), (v["z"], 1), (v["w"], 1)),
                                18 * k + 16, "f^(k+1) g^(k+1) h^k x y z w for m = 3k+2"))
    return out


def _a3_witnesses(m: int) -> List[WitnessEntry]:
    R = RING3
    P = lambda s: parse_poly(s, R)  # noqa: E731
    x, y, z = P("x"), P("y"), P("z")
    ymz, zmx, xmy, xpymz = P("y-z"), P("z-x"), P("x-y"), P("x+y-z")
    k, r = divmod(m, 4)
    if r == 0:
        return [WitnessEntry("a3", m, "case1", ((ymz, k), (zmx, k), (x, k), (y, k), (z, 2 * k), (xmy, 2 * k),
                                                (xpymz, 2 * k)), 10 * k, "case m = 4k")]
    if r == 2:
        if k == 0:
            return []
        kk = k - 1
        G = ((x, 2), (y, 2), (z, 2), (xmy, 2), (ymz, 2), (zmx, 2), (xpymz, 1), (P("y+z-x"), 1), (P("z+x-y"), 1))
        extra = ((ymz, kk), (zmx, kk), (x, kk), (y, kk), (z, 2 * kk), (xmy, 2 * kk), (xpymz, 2 * kk))
        merged: Dict[Polynomial, int] = {}
        order = []
        for p, e in G + extra:
            if p not in merged:
                merged[p] = 0
                order.append(p)
            merged[p] += e
        return [WitnessEntry("a3", m, "case2", tuple((p, merged[p]) for p in order), 10 * (kk + 1) + 5,
                             "case m = 4k+2")]
    if r == 1:
        return [WitnessEntry("a3", m, "case3", ((x, k), (y, k + 1), (z, 2 * k + 1), (ymz, k + 1), (zmx, k),
                                                (xmy, 2 * k), (xpymz, 2 * k)), 10 * k + 3, "case m = 4k+1")]
    return [WitnessEntry("a3", m, "case4", ((ymz, k + 1), (zmx, k + 1), (x, k + 1), (y, k + 1), (z, 2 * k + 2),
                                            (xmy, 2 * k + 1), (xpymz, 2 * k + 1)), 10 * k + 8, "case m = 4k+3")]


def witness_catalog(config_id: str, m: int) -> List[WitnessEntry]:
    """Known low-degree elements of the m-th symbolic power, cheapest first."""
    if m < 1:
        raise BadParameter("m must be >= 1")
    name, n = parse_config_id(config_id)
    if name == "fermat_like":
        out = _fermat_witnesses(n, m)
    elif name == "a3":
        out = _a3_witnesses(m)
    else:
        out = []
    if not out:
        raise NoWitnessKnown(f"no witness family covers {config_id} at m={m}")
    return sorted(out, key=lambda w: w.claimed_degree)


def a3_identities() -> Dict[str, Tuple[Polynomial, Polynomial]]:
    """Polynomial identities behind the K'_1 membership arguments (left == right)."""
    R = RING3
    P = lambda s: parse_poly(s, R)  # noqa: E731
    return {
        "sum_of_generators": (P("-(z-x)*(z+x-y)"), P("(y-z)*(y+z-x)+(x-y)*(x+y-z)")),
        "inK1_1": (P("2*x*(x-y)*(z-x)"), P("(z-x)*(x-y)*(x+y-z)+(x-y)*(z-x)*(z+x-y)")),
        "inK2": (P("(y-z)*(z-x)*x*y*z^2"), P("(y-z)*(z-x)*x*y*(z^2-(x-y)^2)+(y-z)*(z-x)*x*y*(x-y)^2")),
        "inK2_first": (P("(y-z)*(z-x)*x*y*(z^2-(x-y)^2)"), P("x*y*(y-z)*(y+z-x)*(z-x)*(z+x-y)")),
        "inK1_2": (P("y*z*(y-z)"), P("(y-z)*z*(y+z-x)-(y-z)*z*(z-x)")),
    }


def a3_memberships() -> List[Tuple[str, Polynomial, int]]:
    """(name, polynomial, power of K'_1 it must lie in)."""
    R = RING3
    P = lambda s: parse_poly(s, R)  # noqa: E731
    return [
        ("inK1_1", P("2*x*(x-y)*(z-x)"), 1),
        ("inK1_1_y", P("y*(y-z)*(x-y)"), 1),
        ("inK1_1_z", P("z*(z-x)*(y-z)"), 1),
        ("inK2", P("(y-z)*(z-x)*x*y*z^2"), 2),
        ("inK1_2", P("y*z*(y-z)"), 1),
    ]
