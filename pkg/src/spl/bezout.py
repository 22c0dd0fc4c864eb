"""Certified lower bounds for α of symbolic powers by iterated Bezout reduction.

A hypothetical form D of degree d vanishing to order m_i along every member
(line or point) is restricted to each linear reducer H.  If d is smaller than
the sum of the m_i over the members on H, then H divides D.  When every
reducer is forced we divide them all out, which lowers d by the number of
reducers and each m_i by the number of reducers through member i, and repeat.
The run ends in a contradiction (more forced reducers than the degree allows,
or a known α bound undercut) or is inconclusive.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Union

from .catalog import IncidenceConfig, NamedIdeal, build
from .errors import MalformedConfig

Profile = Union[int, Sequence[int]]


@dataclass(frozen=True)
class ReductionClaim:
    config: IncidenceConfig
    d: int
    mults: tuple

    @classmethod
    def uniform(cls, config: IncidenceConfig, d: int, m: int) -> "ReductionClaim":
        return cls(config, d, tuple([m] * len(config.members)))

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be >= 0")
        if len(self.mults) != len(self.config.members):
            raise ValueError("one multiplicity per member")
        if any(v < 0 for v in self.mults):
            raise ValueError("multiplicities must be >= 0")


@dataclass(frozen=True)
class BaseFact:
    """No nonzero form of degree < bound vanishes to the given orders (i.e. α >= bound)."""

    config: str
    profile: Profile
    bound: int
    provenance: str
    name: str = ""

    def dominated_by(self, mults: Sequence[int]) -> bool:
        if isinstance(self.profile, int):
            return all(v >= self.profile for v in mults)
        return len(self.profile) == len(mults) and all(v >= p for v, p in zip(mults, self.profile))

    def to_json(self):
        return {"config": self.config, "profile": self.profile if isinstance(self.profile, int) else list(self.profile),
                "bound": self.bound, "provenance": self.provenance, "name": self.name}

    @classmethod
    def from_json(cls, o):
        p = o["profile"]
        return cls(o["config"], p if isinstance(p, int) else tuple(p), o["bound"], o["provenance"], o.get("name", ""))


@dataclass
class Certificate:
    claim_d: int
    claim_mults: List[int]
    rounds: List[dict] = field(default_factory=list)
    terminal: dict = field(default_factory=dict)
    config_name: str = ""

    @property
    def bound(self) -> int:
        """The certified α lower bound: d0 + 1."""
        return self.claim_d + 1

    def to_json(self) -> dict:
        return {"config": self.config_name, "d": self.claim_d, "mults": list(self.claim_mults),
                "rounds": self.rounds, "terminal": self.terminal, "bound": self.bound}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, o) -> "Certificate":
        return cls(o["d"], list(o["mults"]), [dict(r) for r in o["rounds"]], dict(o["terminal"]), o.get("config", ""))

    @classmethod
    def loads(cls, s: str) -> "Certificate":
        return cls.from_json(json.loads(s))


@dataclass
class Inconclusive:
    claim_d: int
    reason: str
    rounds: List[dict] = field(default_factory=list)

    bound = None

    def __bool__(self):
        return False


def _check_config(config: IncidenceConfig):
    if not config.double_count_ok():
        raise MalformedConfig(f"{config.name}: double count fails")
    ids = {m.id for m in config.members}
    for r in config.reducers:
        if r.degree != 1:
            raise MalformedConfig(f"reducer {r.id} has degree {r.degree}; only linear reducers are supported")
        if not set(r.member_ids) <= ids:
            raise MalformedConfig(f"reducer {r.id} names unknown members")


def _reducer_sums(config: IncidenceConfig, mults: Sequence[int]) -> List[int]:
    idx = config.member_index()
    return [sum(mults[idx[i]] for i in r.member_ids) for r in config.reducers]


def certify_lower_bound(claim: ReductionClaim, base_facts: Sequence[BaseFact] = ()):
    """Certificate that no degree-d form has the claimed vanishing orders, else Inconclusive."""
    config = claim.config
    _check_config(config)
    d = claim.d
    mults = list(claim.mults)
    e = [m.reducer_count for m in config.members]
    nred = len(config.reducers)
    rounds: List[dict] = []
    while True:
        if not any(mults):
            return Inconclusive(claim.d, "all vanishing orders used up", rounds)
        sums = _reducer_sums(config, mults)
        if not all(d < s for s in sums):
            for fact in base_facts:
                if fact.dominated_by(mults) and d < fact.bound:
                    return _done(claim, rounds, {"kind": "base-fact", "name": fact.name, "bound": fact.bound,
                                                 "d": d, "mults": list(mults), "fact": fact.to_json()})
            return Inconclusive(claim.d, f"reducer not forced at d={d}", rounds)
        # every reducer divides D
        if nred > d:
            return _done(claim, rounds, {"kind": "degree-exhaustion", "d": d, "forced": nred,
                                         "mults": list(mults), "sums": sums})
        new = [max(0, v - k) for v, k in zip(mults, e)]
        rounds.append({"d": d, "mults": list(mults), "sums": sums, "removed": nred,
                       "next_d": d - nred, "next_mults": new})
        d -= nred
        mults = new
        for fact in base_facts:
            if fact.dominated_by(mults) and d < fact.bound:
                return _done(claim, rounds, {"kind": "base-fact", "name": fact.name, "bound": fact.bound,
                                             "d": d, "mults": list(mults), "fact": fact.to_json()})


def _done(claim: ReductionClaim, rounds, terminal) -> Certificate:
    return Certificate(claim.d, list(claim.mults), rounds, terminal, claim.config.name)


def replay(cert: Certificate, claim: ReductionClaim) -> bool:
    """Recheck every recorded step from the incidence data alone."""
    config = claim.config
    try:
        _check_config(config)
    except MalformedConfig:
        return False
    if cert.claim_d != claim.d or list(cert.claim_mults) != list(claim.mults):
        return False
    e = [m.reducer_count for m in config.members]
    nred = len(config.reducers)
    d = claim.d
    mults = list(claim.mults)
    for rnd in cert.rounds:
        sums = _reducer_sums(config, mults)
        if rnd.get("d") != d or rnd.get("mults") != mults or rnd.get("sums") != sums:
            return False
        if not all(d < s for s in sums) or rnd.get("removed") != nred or nred > d:
            return False
        d -= nred
        mults = [max(0, v - k) for v, k in zip(mults, e)]
        if rnd.get("next_d") != d or rnd.get("next_mults") != mults:
            return False
    t = cert.terminal
    if t.get("d") != d or t.get("mults") != mults:
        return False
    if t.get("kind") == "degree-exhaustion":
        sums = _reducer_sums(config, mults)
        return t.get("sums") == sums and all(d < s for s in sums) and nred > d and t.get("forced") == nred
    if t.get("kind") == "base-fact":
        fact = BaseFact.from_json(t["fact"])
        return fact.bound == t.get("bound") and fact.dominated_by(mults) and d < fact.bound
    return False


def max_certified(config: IncidenceConfig, m: int, base_facts: Sequence[BaseFact] = (),
                  cap: Optional[int] = None) -> Optional[Certificate]:
    """Certificate for the largest d (scanning up from 0) the prover handles at uniform order m."""
    best = None
    d = 0
    while cap is None or d < cap:
        c = certify_lower_bound(ReductionClaim.uniform(config, d, m), base_facts)
        if not c:
            break
        best = c
        d += 1
    return best


def best_lower_bound(base, m: int, base_facts: Optional[Sequence[BaseFact]] = None) -> Optional[Certificate]:
    N: NamedIdeal = build(base) if isinstance(base, str) else base
    facts = [f for f in (base_facts or ()) if f.config == N.id]
    from .symbolic import power_upper_bound

    return max_certified(N.incidence, m, facts, cap=power_upper_bound(N, m))


def computed_base_fact(base, m: int) -> BaseFact:
    """α(I^(m)) from an exact graded scan, packaged as a uniform base fact."""
    from .symbolic import alpha_exact

    N: NamedIdeal = build(base) if isinstance(base, str) else base
    a = alpha_exact(N, m)
    return BaseFact(N.id, m, a, "computed: exact graded scan", name=f"alpha({N.id}^({m}))={a}")
