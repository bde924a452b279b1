"""Theorem harness: each result becomes a hypothesis filter plus a conclusion check.

Checkers sweep a corpus of rings over ideals, expansions and widths t, and
count cases, cases meeting the hypotheses, and cases whose conclusion held.
Ids prefixed ``LIT-`` encode literal readings that are known to be too
strong; they are logged and never count towards the violation total.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .classify import (
    AbsorbingParams,
    _semiprimary,
    _set_product_cached,
    _zero_set,
)
from .constructions import (
    Homomorphism,
    ProductRing,
    QuotientRing,
    build_product,
    build_quotient,
    coset_map,
    decompose,
    enumerate_subhyperrings,
    identity_map,
    inclusion,
    is_delta_deltaprime_homomorphism,
    projection,
)
from .core import Hyperring
from .corpus import CorpusEntry
from .errors import StructuralError
from .expansions import (
    Expansion,
    builtin,
    has_P_property,
    is_intersection_preserving,
    product_expansion,
    quotient_expansion,
)
from .ideals import Hyperideal, enumerate_hyperideals, is_prime, principal_ideal, radical
from .instance import to_document
from .subsets import is_subset, singleton

# id -> (formal statement, asserted?)
STATEMENTS: dict[str, tuple[str, bool]] = {
    "INV-CHAIN": ("prime => delta-primary => (t,n)-abs delta-primary => (t,n)-abs delta-semiprimary => weakly", True),
    "INV-DELTA-MONOTONE": ("delta(Q) <= delta'(Q) and semi(Q,t,delta) => semi(Q,t,delta')", True),
    "THM-T-STEP": ("(weakly) semi(Q,t,delta) => (weakly) semi(Q,t+1,delta)", True),
    "LIT-V-GT-N": ("(weakly) semi(Q,t,delta) => (weakly) semi(Q,v,delta) for every v > n", False),
    "THM-RADICAL": ("semi(Q,t,delta), rad(delta(Q)) <= delta(rad Q), rad Q proper => semi(rad Q,t,delta)", True),
    "COR-RADICAL-DELTA1": ("semi(Q,t,delta1), rad Q proper => rad Q is (t,n)-absorbing", True),
    "THM-PRINCIPAL": ("all proper ideals semi(t,delta) <=> all proper principal ideals semi(t,delta)", True),
    "THM-INTERSECTION": ("delta meet-preserving, semi(Q_i,t,delta), delta(Q_i) = P => semi(meet Q_i) and delta(meet Q_i) = P", True),
    "THM-DELTA-ABSORBING": ("delta(Q) proper and (weakly) (t,n)-absorbing => Q (weakly) semi(t,delta)", True),
    "THM-IDEMPOTENT": ("delta(delta Q) = delta Q proper: delta Q (weakly) (t,n)-absorbing <=> (weakly) semi(delta Q,t,delta)", True),
    "THM-SHRINK": ("P <= Q proper, delta(P) = delta(Q), Q (weakly) semi(t,delta) => P (weakly) semi(t,delta)", True),
    "THM-STR": ("n=2, Q weakly semi(2,delta), k(Q1,x,y) <= Q, no (q,x,y) a zero, xy notin delta(Q) => k(Q1,x) or k(Q1,y) <= delta(Q)", True),
    "THM-STR2": ("n=2, Q weakly semi(2,delta), k(Q1,Q2,x) <= Q, no (q1,q2,x) a zero => k(Q1,x) or k(Q2,x) or k(Q1,Q2) <= delta(Q)", True),
    "THM-STR3": ("n=2, Q weakly semi(2,delta), 0 != k(Q1,Q2,Q3) <= Q, free => some pair product <= delta(Q)", True),
    "THM-STR4": ("Q weakly semi(t,delta), s positions replaced by ideals, product <= Q, no choice tuple a zero, no element-only u-product in delta(Q) => some u-product using an ideal <= delta(Q)", True),
    "LIT-STR4": ("THM-STR4 without the element-only side condition", False),
    "THM-AZAD": ("Q weakly semi(t,delta), 0 != k(Q_1..Q_w) <= Q, free => some u-product of the Q_i <= delta(Q)", True),
    "THM-ZERO-ANNIHILATION": ("Q weakly semi(t,delta), a a delta-(t,n)-zero, 1 <= s <= u => k(a with s entries replaced by Q) = {0}", True),
    "THM-ZERO-PRODUCT": ("Q weakly but not semi(t,delta) => k(Q^(w)) = {0}", True),
    "COR-NILRADICAL": ("Q weakly but not semi(t,delta) => Q <= rad({0})", True),
    "COR-REDUCED": ("rad({0}) = {0}, Q != {0}, Q weakly semi(t,delta) => Q semi(t,delta)", True),
    "LIT-REDUCED-ZERO": ("COR-REDUCED without Q != {0}", False),
    "THM-ZERO-TRIPLE": ("Q weakly semi(t,delta), delta(Q) = delta({0}) => (Q not semi <=> {0} has a delta-(t,n)-zero)", True),
    "DEF-ZERO-CONSISTENCY": ("Q weakly semi(t,delta) => (Q has a delta-(t,n)-zero <=> Q not semi)", True),
    "THM-DELTA-Q": ("P <= Q proper, semi(Q,t,delta) => semi(Q/P,t,delta_q) in G/P", True),
    "THM-HOME-I": ("f delta-delta' hom, semi(Q2,t,delta'), f^-1(Q2) proper => semi(f^-1(Q2),t,delta)", True),
    "THM-HOME-II": ("f delta-delta' hom, weakly semi(Q2,t,delta'), Ker f proper weakly semi(t,delta) => weakly semi(f^-1(Q2),t,delta)", True),
    "THM-HOME-III": ("f delta-delta' epi, Ker f <= Q1 proper, (weakly) semi(Q1,t,delta) => (weakly) semi(f(Q1),t,delta')", True),
    "THM-SUBRING": ("inclusion G' -> G a delta'-delta hom, semi(Q,t,delta), G' not in Q => semi(Q meet G',t,delta')", True),
    "LIT-SUBRING": ("THM-SUBRING with same-named expansions and no homomorphism condition", False),
    "THM-CART": ("n=2, semi(Q1 x Q2,t+1,d1 x d2) => [semi(Q1,t+1,d1), d2(Q2)=G2] or [semi(Q2,t+1,d2), d1(Q1)=G1] or [semi(Q1,t,d1), semi(Q2,t,d2)]", True),
    "LIT-CART-NARY": ("THM-CART for n >= 3", False),
    "THM-CART3": ("n=2, t=1, w factors, semi(Q,t+1,prod d_i) => one factor semi(t+1) and d_i(Q_i)=G_i elsewhere, or two factors semi(t) and d_i(Q_i)=G_i elsewhere", True),
    "LIT-CART3": ("THM-CART3 for every t and n", False),
    "THM-CART2": ("w factors, each d_i has (P), Q != {0}, Q weakly semi(t,prod d_i) => Q semi(t,prod d_i)", True),
    "LIT-CART2-ZERO": ("THM-CART2 without Q != {0}", False),
    "THM-CART-FULL-FACTOR": ("Q1 x G2 weakly semi(t,d1 x d2) => Q1 x G2 semi(t,d1 x d2)", True),
    "THM-CART-WEAK": ("n=2, t=1, w factors, each d_i has (P), Q != {0}, Q weakly semi(t+1) => one factor semi(t+1) and Q_i=G_i elsewhere, or two factors semi(t) and Q_i=G_i elsewhere", True),
    "LIT-CART-WEAK": ("THM-CART-WEAK for every t, n and Q", False),
}

KEEP_VIOLATIONS = 20
KEEP_EXAMPLES = 5


@dataclass
class HarnessConfig:
    ts: tuple[int, ...] = (1, 2, 3)
    seed: int = 0
    exhaustive_limit: int = 12          # ring size up to which element quantifiers are exhaustive
    sample_size: int = 3000             # configs drawn per quantifier family above that
    str4_max_t: int = 2
    factor_max_size: int = 4
    product_max_size: int = 16
    subring_max_size: int = 8
    products: bool = True


@dataclass
class TheoremCase:
    theorem: str
    ring: str
    config: dict
    hypothesis: bool
    conclusion: bool | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        d = {"theorem": self.theorem, "ring": self.ring, "config": self.config,
             "hypothesis": self.hypothesis, "conclusion": self.conclusion}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class TheoremStats:
    id: str
    cases: int = 0
    hypothesis_met: int = 0
    conclusion_held: int = 0
    violations: int = 0
    enumerated: int = 0
    space: int = 0
    records: list[TheoremCase] = field(default_factory=list)

    @property
    def statement(self) -> str:
        return STATEMENTS[self.id][0]

    @property
    def asserted(self) -> bool:
        return STATEMENTS[self.id][1]

    @property
    def coverage(self) -> float:
        return 1.0 if self.space == 0 else self.enumerated / self.space

    def merge(self, other: "TheoremStats") -> None:
        self.cases += other.cases
        self.hypothesis_met += other.hypothesis_met
        self.conclusion_held += other.conclusion_held
        self.violations += other.violations
        self.enumerated += other.enumerated
        self.space += other.space
        self.records.extend(other.records)

    def to_dict(self) -> dict:
        recs = sorted(self.records, key=lambda c: (c.ring, json.dumps(c.config, sort_keys=True)))[:KEEP_VIOLATIONS]
        return {
            "id": self.id,
            "statement": self.statement,
            "asserted": self.asserted,
            "cases": self.cases,
            "hypothesis_met": self.hypothesis_met,
            "conclusion_held": self.conclusion_held,
            "violations": self.violations,
            "coverage": round(self.coverage, 6),
            "violation_records": [c.to_dict() for c in recs],
        }


class TheoremReport:
    """Per-theorem totals, strictness examples and an archive of rings behind violations."""

    def __init__(self):
        self.stats: dict[str, TheoremStats] = {}
        self.examples: dict[str, list[dict]] = {}
        self.example_counts: dict[str, int] = {}
        self.archive: dict[str, dict] = {}
        self.wall_clock: float = 0.0

    def stat(self, tid: str) -> TheoremStats:
        if tid not in STATEMENTS:
            raise KeyError(f"unknown theorem id {tid}")
        s = self.stats.get(tid)
        if s is None:
            s = self.stats[tid] = TheoremStats(tid)
        return s

    def example(self, key: str, record: dict) -> None:
        self.example_counts[key] = self.example_counts.get(key, 0) + 1
        bucket = self.examples.setdefault(key, [])
        if len(bucket) < KEEP_EXAMPLES:
            bucket.append(record)

    def merge(self, other: "TheoremReport") -> "TheoremReport":
        for tid, s in other.stats.items():
            self.stat(tid).merge(s)
        for key, recs in other.examples.items():
            bucket = self.examples.setdefault(key, [])
            bucket.extend(recs[: KEEP_EXAMPLES - len(bucket)])
        for key, c in other.example_counts.items():
            self.example_counts[key] = self.example_counts.get(key, 0) + c
        self.archive.update(other.archive)
        self.wall_clock += other.wall_clock
        return self

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.stats.values() if s.asserted)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def to_dict(self) -> dict:
        theorems = [self.stats[k].to_dict() for k in sorted(self.stats)]
        kept_rings = {c["ring"] for t in theorems for c in t["violation_records"]}
        return {
            "summary": {
                "theorems": len(theorems),
                "asserted_violations": self.violations,
                "logged_violations": sum(s.violations for s in self.stats.values() if not s.asserted),
            },
            "theorems": theorems,
            "examples": {k: {"count": self.example_counts[k], "first": self.examples[k]} for k in sorted(self.examples)},
            "archive": {k: self.archive[k] for k in sorted(self.archive) if k in kept_rings},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"

    def to_text(self, timing: bool = False) -> str:
        lines = []
        for tid in sorted(self.stats):
            s = self.stats[tid]
            tag = "assert" if s.asserted else "logged"
            status = "ok" if s.violations == 0 else ("VIOLATED" if s.asserted else "fails (logged)")
            lines.append(f"[{tid}] {tag} {status}")
            lines.append(f"  {s.statement}")
            cov = "" if s.space == 0 else f" coverage={s.coverage:.3f}"
            lines.append(f"  cases={s.cases} hypothesis_met={s.hypothesis_met} "
                         f"conclusion_held={s.conclusion_held} violations={s.violations}{cov}")
            for c in sorted(s.records, key=lambda c: (c.ring, json.dumps(c.config, sort_keys=True)))[:3]:
                lines.append(f"  e.g. {c.ring} {json.dumps(c.config, sort_keys=True)} {c.detail}".rstrip())
        for key in sorted(self.examples):
            lines.append(f"[example {key}] count={self.example_counts[key]}")
            for rec in self.examples[key][:2]:
                lines.append(f"  {json.dumps(rec, sort_keys=True)}")
        lines.append(f"total asserted violations: {self.violations}")
        if timing:
            lines.append(f"wall clock: {self.wall_clock:.2f}s")
        return "\n".join(lines) + "\n"


# -- shared machinery ------------------------------------------------------


def _semi(ring: Hyperring, q: int, t: int, target: int, weakly: bool = False) -> bool:
    """(weakly) (t,n)-absorbing semiprimary test on masks; False for non-proper q."""
    if q == ring.full:
        return False
    return _semiprimary(ring, Hyperideal(ring, q), t, target, weakly) is None


def _rad(ring: Hyperring, mask: int) -> int:
    return radical(ring, Hyperideal(ring, mask)).mask


def _zeros(ring: Hyperring, q: int, t: int, target: int) -> frozenset:
    return _zero_set(ring, Hyperideal(ring, q), t, target)


def _assignable(values: Sequence[int], masks: Sequence[int]) -> bool:
    """Whether the multiset ``values`` can be placed one per mask, each in its mask."""
    used = [False] * len(masks)

    def go(i: int) -> bool:
        if i == len(values):
            return True
        seen = set()
        for j, m in enumerate(masks):
            if not used[j] and m >> values[i] & 1 and m not in seen:
                seen.add(m)
                used[j] = True
                if go(i + 1):
                    return True
                used[j] = False
        return False

    return go(0)


def _hits_zero(zeros: frozenset, masks: Sequence[int]) -> bool:
    """Some choice of one element per mask is a listed zero tuple."""
    return any(_assignable(z, masks) for z in zeros)


def _subsets_touching(w: int, u: int, special: set[int]) -> list[tuple[int, ...]]:
    return [s for s in itertools.combinations(range(w), u) if special.intersection(s)]


def _multisets(pool: Sequence, r: int) -> int:
    return math.comb(len(pool) + r - 1, r) if r else 1


class _Lab:
    """Holds the corpus, the config, the report being filled and derived structures."""

    def __init__(self, corpus: Sequence[CorpusEntry], config: HarnessConfig, report: TheoremReport):
        self.corpus = list(corpus)
        self.config = config
        self.report = report
        self.rng = random.Random(config.seed)
        self._quotients: dict[tuple[str, int], QuotientRing | None] = {}
        self._products: dict[int, list[tuple[str, ProductRing]]] | None = None
        self._rings: dict[str, Hyperring] = {}

    # bookkeeping

    def register(self, rid: str, ring: Hyperring) -> str:
        self._rings.setdefault(rid, ring)
        return rid

    def case(self, tid: str, rid: str, config: Callable[[], dict], hypothesis: bool,
             conclusion: Callable[[], bool | tuple[bool, str]] | None = None) -> None:
        s = self.report.stat(tid)
        s.cases += 1
        if not hypothesis:
            return
        s.hypothesis_met += 1
        out = conclusion() if conclusion is not None else True
        detail = ""
        if isinstance(out, tuple):
            out, detail = out
        if out:
            s.conclusion_held += 1
            return
        s.violations += 1
        if len(s.records) < 4 * KEEP_VIOLATIONS:
            s.records.append(TheoremCase(tid, rid, config(), True, False, detail))
            if rid not in self.report.archive:
                self.report.archive[rid] = to_document(self._rings[rid])

    def sample_space(self, tid: str, ring: Hyperring, parts: Sequence[tuple[Sequence, int]]) -> Iterator[tuple]:
        """Every combination of one multiset per (pool, r) part, or a seeded sample of them."""
        total = 1
        for pool, r in parts:
            total *= _multisets(pool, r)
        s = self.report.stat(tid)
        s.space += total
        if ring.size <= self.config.exhaustive_limit and total <= 20 * self.config.sample_size:
            s.enumerated += total
            yield from itertools.product(*(itertools.combinations_with_replacement(pool, r) for pool, r in parts))
            return
        seen = set()
        for _ in range(self.config.sample_size):
            pick = tuple(tuple(sorted(self.rng.choices(pool, k=r))) for pool, r in parts)
            seen.add(pick)
        s.enumerated += len(seen)
        yield from sorted(seen)

    # derived structures

    def classifiable(self) -> Iterator[CorpusEntry]:
        for e in self.corpus:
            if e.classifiable:
                self.register(e.id, e.ring)
                yield e

    def quotient(self, e: CorpusEntry, p: int) -> QuotientRing | None:
        key = (e.id, p)
        if key not in self._quotients:
            try:
                q = build_quotient(e.ring, p, name="P")
            except StructuralError:
                q = None
            self._quotients[key] = q
            if q is not None:
                self.register(self.quotient_id(e, p), q)
        return self._quotients[key]

    @staticmethod
    def quotient_id(e: CorpusEntry, p: int) -> str:
        return f"{e.id}/{{{','.join(e.ring.labels_of(p))}}}"

    def products(self, s: int) -> list[tuple[str, ProductRing]]:
        """Products of s small fixtures with a common (m, n), as multisets of factors."""
        if self._products is None:
            self._products = {}
        if s not in self._products:
            pool = [e for e in self.corpus if e.classifiable and e.ring.size <= self.config.factor_max_size]
            out = []
            groups: dict[tuple[int, int], list[CorpusEntry]] = {}
            for e in pool:
                groups.setdefault((e.ring.m, e.ring.n), []).append(e)
            for key in sorted(groups):
                for combo in itertools.combinations_with_replacement(groups[key], s):
                    if math.prod(e.ring.size for e in combo) > self.config.product_max_size:
                        continue
                    prod = build_product([e.ring for e in combo], cap=self.config.product_max_size)
                    rid = " x ".join(e.id for e in combo)
                    out.append((self.register(rid, prod), prod))
            self._products[s] = out
        return self._products[s]


def _cfg(ring: Hyperring, **kw) -> dict:
    out = {}
    for k, v in kw.items():
        if isinstance(v, Hyperideal):
            out[k] = ring.labels_of(v.mask)
        elif isinstance(v, tuple) and v and isinstance(v[0], str):
            out[k] = list(v)
        else:
            out[k] = v
    return out


def _labels(ring: Hyperring, mask: int) -> list[str]:
    return ring.labels_of(mask)


# -- per-ring checkers -----------------------------------------------------


def _chain(lab: _Lab) -> None:
    from .classify import is_delta_primary, is_tn_absorbing_delta_primary

    for e in lab.classifiable():
        ring = e.ring
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            prime = bool(is_prime(ring, Q))
            for d in e.expansions:
                target = d.image(Q)
                dprim = bool(is_delta_primary(ring, Q, d))
                for t in lab.config.ts:
                    aprim = bool(is_tn_absorbing_delta_primary(ring, Q, t, d))
                    semi = _semi(ring, Q.mask, t, target)
                    weak = _semi(ring, Q.mask, t, target, weakly=True)
                    links = [("prime", prime, "delta-primary", dprim),
                             ("delta-primary", dprim, "(t,n)-abs delta-primary", aprim),
                             ("(t,n)-abs delta-primary", aprim, "semiprimary", semi),
                             ("semiprimary", semi, "weakly", weak)]
                    broken = [f"{a} without {b}" for a, va, b, vb in links if va and not vb]
                    lab.case("INV-CHAIN", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t), True,
                             lambda: (not broken, "; ".join(broken)))
                    if semi and not prime:
                        lab.report.example("semiprimary-not-prime",
                                           {"ring": e.id, "Q": _labels(ring, Q.mask), "delta": d.name, "t": t})
                    if aprim and not dprim:
                        lab.report.example("absorbing-primary-not-delta-primary",
                                           {"ring": e.id, "Q": _labels(ring, Q.mask), "delta": d.name, "t": t})
                    if semi and not aprim:
                        lab.report.example("semiprimary-not-absorbing-primary",
                                           {"ring": e.id, "Q": _labels(ring, Q.mask), "delta": d.name, "t": t})
                    if weak and not semi:
                        lab.report.example("weakly-not-semiprimary",
                                           {"ring": e.id, "Q": _labels(ring, Q.mask), "delta": d.name, "t": t})


def _delta_monotone(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            for d1, d2 in itertools.permutations(e.expansions, 2):
                a, b = d1.image(Q), d2.image(Q)
                for t in lab.config.ts:
                    hyp = is_subset(a, b) and _semi(ring, Q.mask, t, a)
                    lab.case("INV-DELTA-MONOTONE", e.id, lambda: _cfg(ring, Q=Q, delta=d1.name, delta_prime=d2.name, t=t),
                             hyp, lambda: _semi(ring, Q.mask, t, b))


def _t_step(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        n = ring.n
        vs = [v for v in range(n + 1, max(lab.config.ts) + 2)]
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            for d in e.expansions:
                target = d.image(Q)
                for weakly in (False, True):
                    for t in lab.config.ts:
                        held = _semi(ring, Q.mask, t, target, weakly)
                        lab.case("THM-T-STEP", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t, weakly=weakly), held,
                                 lambda: _semi(ring, Q.mask, t + 1, target, weakly))
                        for v in vs:
                            lab.case("LIT-V-GT-N", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t, v=v, weakly=weakly),
                                     held, lambda: _semi(ring, Q.mask, v, target, weakly))


def _radical(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            rq = _rad(ring, Q.mask)
            for d in e.expansions:
                target = d.image(Q)
                side = is_subset(_rad(ring, target), d.image(rq))
                for t in lab.config.ts:
                    hyp = side and rq != ring.full and _semi(ring, Q.mask, t, target)
                    lab.case("THM-RADICAL", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t), hyp,
                             lambda: _semi(ring, rq, t, d.image(rq)))
                    if d.name == "delta1":
                        lab.case("COR-RADICAL-DELTA1", e.id, lambda: _cfg(ring, Q=Q, t=t),
                                 rq != ring.full and _semi(ring, Q.mask, t, target),
                                 lambda: _semi(ring, rq, t, rq))


def _principal(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        proper = [Q.mask for Q in enumerate_hyperideals(ring) if Q.is_proper]
        principal = sorted({principal_ideal(ring, g).mask for g in ring.elements} - {ring.full})
        for d in e.expansions:
            for t in lab.config.ts:
                lhs = all(_semi(ring, q, t, d.image(q)) for q in proper)
                rhs = all(_semi(ring, q, t, d.image(q)) for q in principal)
                lab.case("THM-PRINCIPAL", e.id, lambda: _cfg(ring, delta=d.name, t=t), True,
                         lambda: (lhs == rhs, f"all={lhs} principal={rhs}"))


def _intersection(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        proper = [Q.mask for Q in enumerate_hyperideals(ring) if Q.is_proper]
        for d in e.expansions:
            preserving = bool(is_intersection_preserving(ring, d))
            for t in lab.config.ts:
                groups: dict[int, list[int]] = {}
                for q in proper:
                    if _semi(ring, q, t, d.image(q)):
                        groups.setdefault(d.image(q), []).append(q)
                for p, members_ in sorted(groups.items()):
                    for size in (1, 2, 3):
                        for fam in itertools.combinations(members_, size):
                            meet = ring.full
                            for q in fam:
                                meet &= q
                            lab.case("THM-INTERSECTION", e.id,
                                     lambda: _cfg(ring, family=[_labels(ring, q) for q in fam], delta=d.name, t=t),
                                     preserving,
                                     lambda: _semi(ring, meet, t, d.image(meet)) and d.image(meet) == p)


def _delta_absorbing(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            for d in e.expansions:
                dq = d.image(Q)
                idem = d.image(dq) == dq
                for weakly in (False, True):
                    for t in lab.config.ts:
                        absorbing = dq != ring.full and _semi(ring, dq, t, dq, weakly)
                        lab.case("THM-DELTA-ABSORBING", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t, weakly=weakly),
                                 absorbing, lambda: _semi(ring, Q.mask, t, dq, weakly))
                        lab.case("THM-IDEMPOTENT", e.id, lambda: _cfg(ring, Q=Q, delta=d.name, t=t, weakly=weakly),
                                 idem and dq != ring.full,
                                 lambda: absorbing == _semi(ring, dq, t, d.image(dq), weakly))


def _shrink(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        proper = [Q.mask for Q in enumerate_hyperideals(ring) if Q.is_proper]
        for d in e.expansions:
            for q, p in itertools.product(proper, repeat=2):
                if not is_subset(p, q) or d.image(p) != d.image(q):
                    continue
                for weakly in (False, True):
                    for t in lab.config.ts:
                        lab.case("THM-SHRINK", e.id,
                                 lambda: _cfg(ring, Q=_labels(ring, q), P=_labels(ring, p), delta=d.name, t=t, weakly=weakly),
                                 _semi(ring, q, t, d.image(q), weakly),
                                 lambda: _semi(ring, p, t, d.image(p), weakly))


# -- str family ------------------------------------------------------------


def _weak_configs(lab: _Lab, ts: Iterable[int]) -> Iterator[tuple[CorpusEntry, int, Expansion, int, int, frozenset]]:
    """(entry, Q mask, delta, t, delta(Q), zero set) for every weakly semiprimary Q."""
    for e in lab.classifiable():
        ring = e.ring
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            for d in e.expansions:
                target = d.image(Q)
                for t in ts:
                    if _semi(ring, Q.mask, t, target, weakly=True):
                        yield e, Q.mask, d, t, target, _zeros(ring, Q.mask, t, target)


def _str_family(lab: _Lab) -> None:
    sp = _set_product_cached
    for e, q, d, t, target, zeros in _weak_configs(lab, [2]):
        ring = e.ring
        if ring.n != 2:
            continue
        elems = list(ring.elements)
        lattice = [I.mask for I in enumerate_hyperideals(ring)]
        base = dict(Q=_labels(ring, q), delta=d.name)

        for (xs, (q1,)) in lab.sample_space("THM-STR", ring, [(elems, 2), (lattice, 1)]):
            x, y = xs
            sx, sy = singleton(x), singleton(y)
            hyp = (is_subset(sp(ring, [q1, sx, sy]), q) and not _hits_zero(zeros, [q1, sx, sy])
                   and not target >> ring.k(x, y) & 1)
            lab.case("THM-STR", e.id, lambda: dict(base, x=ring.labels[x], y=ring.labels[y], Q1=_labels(ring, q1)), hyp,
                     lambda: is_subset(sp(ring, [q1, sx]), target) or is_subset(sp(ring, [q1, sy]), target))

        for ((x,), (q1, q2)) in lab.sample_space("THM-STR2", ring, [(elems, 1), (lattice, 2)]):
            sx = singleton(x)
            hyp = is_subset(sp(ring, [q1, q2, sx]), q) and not _hits_zero(zeros, [q1, q2, sx])
            lab.case("THM-STR2", e.id, lambda: dict(base, x=ring.labels[x], Q1=_labels(ring, q1), Q2=_labels(ring, q2)), hyp,
                     lambda: any(is_subset(sp(ring, pair), target) for pair in ([q1, sx], [q2, sx], [q1, q2])))

        for ((q1, q2, q3),) in lab.sample_space("THM-STR3", ring, [(lattice, 3)]):
            full = sp(ring, [q1, q2, q3])
            hyp = full != singleton(ring.zero) and is_subset(full, q) and not _hits_zero(zeros, [q1, q2, q3])
            lab.case("THM-STR3", e.id,
                     lambda: dict(base, Q1=_labels(ring, q1), Q2=_labels(ring, q2), Q3=_labels(ring, q3)), hyp,
                     lambda: any(is_subset(sp(ring, pair), target) for pair in ([q1, q2], [q2, q3], [q1, q3])))


def _str4(lab: _Lab) -> None:
    sp = _set_product_cached
    ts = [t for t in lab.config.ts if t <= lab.config.str4_max_t]
    for e, q, d, t, target, zeros in _weak_configs(lab, ts):
        ring = e.ring
        params = AbsorbingParams(t, ring.n)
        w, u = params.w, params.u
        elems = list(ring.elements)
        lattice = [I.mask for I in enumerate_hyperideals(ring)]
        for s in range(1, u + 1):
            ideal_pos = set(range(w - s, w))
            touching = _subsets_touching(w, u, ideal_pos)
            elem_only = [sub for sub in itertools.combinations(range(w - s), u)]
            for tid in ("THM-STR4", "LIT-STR4"):
                for xs, qs in lab.sample_space(tid, ring, [(elems, w - s), (lattice, s)]):
                    masks = [singleton(x) for x in xs] + list(qs)
                    hyp = is_subset(sp(ring, masks), q) and not _hits_zero(zeros, masks)
                    if hyp and tid == "THM-STR4":
                        hyp = not any(target >> ring.product([xs[i] for i in sub]) & 1 for sub in elem_only)
                    lab.case(tid, e.id,
                             lambda: dict(Q=_labels(ring, q), delta=d.name, t=t, s=s,
                                          elements=[ring.labels[x] for x in xs], ideals=[_labels(ring, m) for m in qs]),
                             hyp,
                             lambda: any(is_subset(sp(ring, [masks[i] for i in sub]), target) for sub in touching))


def _azad(lab: _Lab) -> None:
    sp = _set_product_cached
    zero = None
    for e, q, d, t, target, zeros in _weak_configs(lab, lab.config.ts):
        ring = e.ring
        zero = singleton(ring.zero)
        params = AbsorbingParams(t, ring.n)
        lattice = [I.mask for I in enumerate_hyperideals(ring)]
        subsets = params.subsets
        for (qs,) in lab.sample_space("THM-AZAD", ring, [(lattice, params.w)]):
            full = sp(ring, qs)
            hyp = full != zero and is_subset(full, q) and not _hits_zero(zeros, qs)
            lab.case("THM-AZAD", e.id, lambda: dict(Q=_labels(ring, q), delta=d.name, t=t, ideals=[_labels(ring, m) for m in qs]),
                     hyp, lambda: any(is_subset(sp(ring, [qs[i] for i in sub]), target) for sub in subsets))


# -- zeros and zero products -----------------------------------------------


def _zero_theorems(lab: _Lab) -> None:
    sp = _set_product_cached
    for e in lab.classifiable():
        ring = e.ring
        zero = singleton(ring.zero)
        nil = _rad(ring, zero)
        for Q in enumerate_hyperideals(ring):
            if not Q.is_proper:
                continue
            q = Q.mask
            for d in e.expansions:
                target = d.image(q)
                for t in lab.config.ts:
                    params = AbsorbingParams(t, ring.n)
                    weak = _semi(ring, q, t, target, weakly=True)
                    semi = _semi(ring, q, t, target)
                    cfg = lambda: _cfg(ring, Q=Q, delta=d.name, t=t)
                    lab.case("THM-ZERO-PRODUCT", e.id, cfg, weak and not semi,
                             lambda: sp(ring, [q] * params.w) == zero)
                    lab.case("COR-NILRADICAL", e.id, cfg, weak and not semi, lambda: is_subset(q, nil))
                    lab.case("COR-REDUCED", e.id, cfg, nil == zero and q != zero and weak, lambda: semi)
                    lab.case("LIT-REDUCED-ZERO", e.id, cfg, nil == zero and weak, lambda: semi)
                    zeros = _zeros(ring, q, t, target)
                    lab.case("DEF-ZERO-CONSISTENCY", e.id, cfg, weak, lambda: bool(zeros) == (not semi))
                    same = d.image(zero) == target
                    lab.case("THM-ZERO-TRIPLE", e.id, cfg, weak and same,
                             lambda: (not semi) == bool(_zeros(ring, zero, t, d.image(zero))))
                    if not weak:
                        continue
                    for z in sorted(zeros):
                        for s in range(1, params.u + 1):
                            rests = sorted({tuple(z[i] for i in range(params.w) if i not in drop)
                                            for drop in itertools.combinations(range(params.w), s)})
                            for rest in rests:
                                lab.case("THM-ZERO-ANNIHILATION", e.id,
                                         lambda: _cfg(ring, Q=Q, delta=d.name, t=t, zero=[ring.labels[x] for x in z],
                                                      s=s, kept=[ring.labels[x] for x in rest]),
                                         True,
                                         lambda: sp(ring, [singleton(x) for x in rest] + [q] * s) == zero)


# -- constructions -----------------------------------------------------------


def _delta_q(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        proper = [Q.mask for Q in enumerate_hyperideals(ring) if Q.is_proper]
        for p in proper:
            qr = lab.quotient(e, p)
            if qr is None:
                lab.case("THM-DELTA-Q", e.id, lambda: _cfg(ring, P=_labels(ring, p)), True,
                         lambda: (False, "quotient construction failed"))
                continue
            qid = lab.quotient_id(e, p)
            f = coset_map(qr)
            for d in e.expansions:
                dq = quotient_expansion(d, qr)
                for q in proper:
                    if not is_subset(p, q):
                        continue
                    img = f.image_mask(q)
                    for t in lab.config.ts:
                        lab.case("THM-DELTA-Q", e.id,
                                 lambda: _cfg(ring, P=_labels(ring, p), Q=_labels(ring, q), delta=d.name, t=t, quotient=qid),
                                 _semi(ring, q, t, d.image(q)),
                                 lambda: _semi(qr, img, t, dq.image(img)))


def _homomorphisms(lab: _Lab) -> Iterator[tuple[str, Homomorphism, Expansion, Expansion]]:
    for e in lab.classifiable():
        for d in e.expansions:
            yield e.id, identity_map(e.ring), d, d
        for P in enumerate_hyperideals(e.ring):
            if not P.is_proper:
                continue
            qr = lab.quotient(e, P.mask)
            if qr is None:
                continue
            f = coset_map(qr)
            for d in e.expansions:
                yield e.id, f, d, quotient_expansion(d, qr)
    if lab.config.products:
        for rid, prod in lab.products(2):
            combos = itertools.product(*([builtin(n, f) for n in ("delta0", "delta1", "deltaR")] for f in prod.factors))
            for ds in combos:
                big = product_expansion(list(ds), prod)
                for j in range(2):
                    yield rid, projection(prod, j), big, ds[j]


def _home(lab: _Lab) -> None:
    for rid, f, d, dp in _homomorphisms(lab):
        src, dst = f.source, f.target
        ok = bool(is_delta_deltaprime_homomorphism(f, d, dp))
        ker = f.kernel.mask
        name = f"{f.name}:{d.name}->{dp.name}"
        for t in lab.config.ts:
            ker_weak = ker != src.full and _semi(src, ker, t, d.image(ker), weakly=True)
            for Q2 in enumerate_hyperideals(dst):
                if not Q2.is_proper:
                    continue
                q2 = Q2.mask
                pre = f.preimage_mask(q2)
                cfg = lambda: dict(map=name, target=dst.name, Q2=_labels(dst, q2), t=t)
                lab.case("THM-HOME-I", rid, cfg, ok and pre != src.full and _semi(dst, q2, t, dp.image(q2)),
                         lambda: _semi(src, pre, t, d.image(pre)))
                lab.case("THM-HOME-II", rid, cfg,
                         ok and ker_weak and pre != src.full and _semi(dst, q2, t, dp.image(q2), weakly=True),
                         lambda: _semi(src, pre, t, d.image(pre), weakly=True))
            if not f.surjective:
                continue
            for Q1 in enumerate_hyperideals(src):
                q1 = Q1.mask
                if q1 == src.full or not is_subset(ker, q1):
                    continue
                img = f.image_mask(q1)
                for weakly in (False, True):
                    lab.case("THM-HOME-III", rid, lambda: dict(map=name, Q1=_labels(src, q1), t=t, weakly=weakly),
                             ok and _semi(src, q1, t, d.image(q1), weakly),
                             lambda: (_semi(dst, img, t, dp.image(img), weakly), f"image {_labels(dst, img)}"))


def _subring(lab: _Lab) -> None:
    for e in lab.classifiable():
        ring = e.ring
        if ring.size > lab.config.subring_max_size:
            continue
        for sub in enumerate_subhyperrings(ring, with_identity=True, cap=lab.config.subring_max_size):
            if sub.carrier_mask == ring.full:
                continue
            incl = inclusion(sub)
            lab.register(f"{e.id}[{','.join(sub.labels)}]", sub)
            lab.register(e.id, ring)
            for d in e.expansions:
                if d.name not in ("delta0", "delta1", "deltaR"):
                    continue
                dp = builtin(d.name, sub)
                hom = bool(is_delta_deltaprime_homomorphism(incl, dp, d))
                for Q in enumerate_hyperideals(ring):
                    if not Q.is_proper or is_subset(sub.carrier_mask, Q.mask):
                        continue
                    local = incl.preimage_mask(Q.mask)
                    for t in lab.config.ts:
                        held = _semi(ring, Q.mask, t, d.image(Q))
                        for tid, hyp in (("THM-SUBRING", hom and held), ("LIT-SUBRING", held)):
                            lab.case(tid, e.id, lambda: _cfg(ring, sub=list(sub.labels), Q=Q, delta=d.name, t=t), hyp,
                                     lambda: _semi(sub, local, t, dp.image(local)))


def _product_family(lab: _Lab) -> None:
    if not lab.config.products:
        return
    names = ("delta0", "delta1", "deltaR")
    max_t = max(lab.config.ts)
    for s in sorted({2} | {AbsorbingParams(t, n).w for t in lab.config.ts for n in {e.ring.n for e in lab.corpus}}):
        for rid, prod in lab.products(s):
            n = prod.n
            factors = prod.factors
            lattice = enumerate_hyperideals(prod)
            parts_of = {I.mask: tuple(p.mask for p in decompose(prod, I)) for I in lattice}
            zero = singleton(prod.zero)
            for names_combo in itertools.product(names, repeat=s):
                ds = [builtin(nm, f) for nm, f in zip(names_combo, factors)]
                big = product_expansion(ds, prod)
                pprop = all(has_P_property(f, d) for f, d in zip(factors, ds))
                dname = "x".join(names_combo)

                def fsemi(i, qi, t):
                    return _semi(factors[i], qi, t, ds[i].image(qi))

                def dfull(i, qi):
                    return ds[i].image(qi) == factors[i].full

                for Q in lattice:
                    if not Q.is_proper:
                        continue
                    q = Q.mask
                    parts = parts_of[q]
                    cfg = lambda: _cfg(prod, Q=Q, deltas=dname, t=t)
                    for t in lab.config.ts:
                        w = AbsorbingParams(t, n).w
                        if s == 2 and t + 1 <= max_t:
                            def cart():
                                a = fsemi(0, parts[0], t + 1) and dfull(1, parts[1])
                                b = fsemi(1, parts[1], t + 1) and dfull(0, parts[0])
                                c = fsemi(0, parts[0], t) and fsemi(1, parts[1], t)
                                return a or b or c
                            hyp = _semi(prod, q, t + 1, big.image(q))
                            lab.case("THM-CART" if n == 2 else "LIT-CART-NARY", rid, cfg, hyp, cart)
                        if s == 2 and parts[1] == factors[1].full:
                            lab.case("THM-CART-FULL-FACTOR", rid, cfg, _semi(prod, q, t, big.image(q), weakly=True),
                                     lambda: _semi(prod, q, t, big.image(q)))
                        if s != w:
                            continue
                        if t + 1 <= max_t:
                            def cart3():
                                for u_ in range(s):
                                    if fsemi(u_, parts[u_], t + 1) and all(dfull(i, parts[i]) for i in range(s) if i != u_):
                                        return True
                                for u_, v_ in itertools.combinations(range(s), 2):
                                    if (fsemi(u_, parts[u_], t) and fsemi(v_, parts[v_], t)
                                            and all(dfull(i, parts[i]) for i in range(s) if i not in (u_, v_))):
                                        return True
                                return False
                            hyp = _semi(prod, q, t + 1, big.image(q))
                            lab.case("THM-CART3", rid, cfg, hyp and n == 2 and t == 1, cart3)
                            lab.case("LIT-CART3", rid, cfg, hyp, cart3)

                            def cart_weak():
                                full = [parts[i] == factors[i].full for i in range(s)]
                                for u_ in range(s):
                                    if fsemi(u_, parts[u_], t + 1) and all(full[i] for i in range(s) if i != u_):
                                        return True
                                for u_, v_ in itertools.combinations(range(s), 2):
                                    if (fsemi(u_, parts[u_], t) and fsemi(v_, parts[v_], t)
                                            and all(full[i] for i in range(s) if i not in (u_, v_))):
                                        return True
                                return False
                            weak1 = pprop and _semi(prod, q, t + 1, big.image(q), weakly=True)
                            lab.case("THM-CART-WEAK", rid, cfg, weak1 and q != zero and n == 2 and t == 1, cart_weak)
                            lab.case("LIT-CART-WEAK", rid, cfg, weak1, cart_weak)
                        weak = pprop and _semi(prod, q, t, big.image(q), weakly=True)
                        concl = lambda: _semi(prod, q, t, big.image(q))
                        lab.case("THM-CART2", rid, cfg, weak and q != zero, concl)
                        lab.case("LIT-CART2-ZERO", rid, cfg, weak, concl)


# -- public entry points ---------------------------------------------------

CHECKERS: dict[str, Callable[[_Lab], None]] = {
    "chain": _chain,
    "delta-monotone": _delta_monotone,
    "t-step": _t_step,
    "radical": _radical,
    "principal": _principal,
    "intersection": _intersection,
    "delta-absorbing": _delta_absorbing,
    "shrink": _shrink,
    "str": _str_family,
    "str4": _str4,
    "azad": _azad,
    "zeros": _zero_theorems,
    "delta-q": _delta_q,
    "home": _home,
    "subring": _subring,
    "products": _product_family,
}


def _run(corpus: Sequence[CorpusEntry], names: Iterable[str], config: HarnessConfig | None) -> TheoremReport:
    config = config or HarnessConfig()
    report = TheoremReport()
    lab = _Lab(corpus, config, report)
    start = time.perf_counter()
    for name in names:
        CHECKERS[name](lab)
    report.wall_clock = time.perf_counter() - start
    return report


def run_suite(corpus: Sequence[CorpusEntry], config: HarnessConfig | None = None) -> TheoremReport:
    return _run(corpus, CHECKERS, config)


def check_implication_chain(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["chain", "delta-monotone", "t-step"], config)


def check_radical_theorem(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["radical"], config)


def check_principal_criterion(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["principal"], config)


def check_intersection_theorem(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["intersection"], config)


def check_expansion_theorems(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["delta-absorbing", "shrink"], config)


def check_delta_q_theorem(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["delta-q"], config)


def check_home_theorem(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["home"], config)


def check_subhyperring_theorem(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["subring"], config)


def check_str_family(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["str", "str4", "azad"], config)


def check_zero_annihilation(corpus, config=None) -> TheoremReport:
    report = _run(corpus, ["zeros"], config)
    return _only(report, {"THM-ZERO-ANNIHILATION"})


def check_zero_product_theorems(corpus, config=None) -> TheoremReport:
    report = _run(corpus, ["zeros"], config)
    return _only(report, {"THM-ZERO-PRODUCT", "COR-NILRADICAL", "COR-REDUCED"})


def check_zero_triple_equivalence(corpus, config=None) -> TheoremReport:
    report = _run(corpus, ["zeros"], config)
    return _only(report, {"THM-ZERO-TRIPLE", "DEF-ZERO-CONSISTENCY"})


def check_product_theorems(corpus, config=None) -> TheoremReport:
    return _run(corpus, ["products"], config)


def _only(report: TheoremReport, ids: set[str]) -> TheoremReport:
    report.stats = {k: v for k, v in report.stats.items() if k in ids}
    return report
