"""Seeded random generation of small Krasner hyperrings, swept through the theorem suite."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import reduce

from .builders import krasner_quotient, poly_ring, subgroup_generated, units_of
from .core import Hyperring
from .corpus import CorpusEntry
from .errors import KrasnerError
from .theorems import HarnessConfig, TheoremReport, run_suite

KINDS = ("zmod-quotient", "poly-quotient", "product-quotient", "perturbed", "random-table")


@dataclass
class GeneratorConfig:
    seed: int = 0
    max_size: int = 6
    m: int = 2
    n: int = 2
    weights: tuple[float, ...] = (4, 2, 2, 1, 1)


@dataclass
class SearchResult:
    report: TheoremReport
    generated: int = 0
    valid: int = 0
    distinct: int = 0
    by_kind: dict[str, list[int]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "generated": self.generated,
            "valid": self.valid,
            "distinct": self.distinct,
            "by_kind": {k: {"generated": v[0], "valid": v[1]} for k, v in sorted(self.by_kind.items())},
            "report": self.report.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1, sort_keys=True) + "\n"


def _random_units_quotient(rng: random.Random, size: int, add, mul, cfg: GeneratorConfig, name: str) -> Hyperring | None:
    units = units_of(size, mul)
    gens = rng.sample(units, k=rng.randint(1, min(2, len(units))))
    group = subgroup_generated(gens, mul)
    ring = krasner_quotient(size, add, mul, group, m=cfg.m, n=cfg.n, name=name)
    return ring if ring.size <= cfg.max_size else None


def _zmod_candidate(rng, cfg, name):
    k = rng.randint(2, 4 * cfg.max_size)
    return _random_units_quotient(rng, k, lambda a, b: (a + b) % k, lambda a, b: (a * b) % k, cfg, name)


def _poly_candidate(rng, cfg, name):
    p = rng.choice([2, 3])
    deg = rng.choice([1, 2]) if p == 3 else rng.choice([2, 3])
    coeffs = [rng.randrange(p) for _ in range(deg)]
    size, add, mul, _labels = poly_ring(p, coeffs)
    return _random_units_quotient(rng, size, add, mul, cfg, name)


def _product_candidate(rng, cfg, name):
    a, b = rng.randint(2, 6), rng.randint(2, 6)
    size = a * b
    one = b + 1  # code of (1, 1); swapped with code 1 so the builders see 1 as identity

    def swap(x):
        return one if x == 1 else 1 if x == one else x

    def add(u, v):
        u, v = swap(u), swap(v)
        return swap(((u // b + v // b) % a) * b + (u % b + v % b) % b)

    def mul(u, v):
        u, v = swap(u), swap(v)
        return swap(((u // b) * (v // b) % a) * b + (u % b) * (v % b) % b)

    return _random_units_quotient(rng, size, add, mul, cfg, name)


def _perturbed_candidate(rng, cfg, name):
    base = None
    for _ in range(20):
        base = _zmod_candidate(rng, cfg, name)
        if base is not None and base.size > 1:
            break
    if base is None or base.size <= 1:
        return None
    h = dict(base.h_table())
    key = rng.choice(sorted(h))
    flipped = h[key] ^ (1 << rng.randrange(base.size))
    h[key] = flipped or h[key]
    return Hyperring(base.m, base.n, base.labels, h, base.k_table(), base.zero, base.one, name=name)


def _random_table_candidate(rng, cfg, name):
    size = rng.randint(1, cfg.max_size)
    full = (1 << size) - 1
    h = {}
    for xs in itertools.combinations_with_replacement(range(size), cfg.m):
        if 0 in xs:
            others = [x for x in xs if x != 0]
            h[xs] = 1 << (others[0] if others else 0) if len(others) <= 1 else rng.randint(1, full)
        else:
            h[xs] = rng.randint(1, full)
    k = {xs: reduce(lambda a, b: a * b % size, xs) for xs in itertools.combinations_with_replacement(range(size), cfg.n)}
    return Hyperring(cfg.m, cfg.n, [str(i) for i in range(size)], h, k, 0, 1 % size if size > 1 else 0, name=name)


_BUILDERS = {
    "zmod-quotient": _zmod_candidate,
    "poly-quotient": _poly_candidate,
    "product-quotient": _product_candidate,
    "perturbed": _perturbed_candidate,
    "random-table": _random_table_candidate,
}


def generate(cfg: GeneratorConfig, budget: int):
    """Yield (index, kind, ring or None) for ``budget`` candidates; None when rejected early."""
    rng = random.Random(cfg.seed)
    for i in range(budget):
        kind = rng.choices(KINDS, weights=cfg.weights)[0]
        try:
            ring = _BUILDERS[kind](rng, cfg, f"rand{i}")
        except KrasnerError:
            ring = None
        yield i, kind, ring


def _signature(ring: Hyperring) -> tuple:
    return (ring.m, ring.n, ring.size, ring.zero, tuple(sorted(ring.h_table().items())), tuple(sorted(ring.k_table().items())))


def counterexample_search(budget: int, gen: GeneratorConfig | None = None,
                          harness: HarnessConfig | None = None) -> SearchResult:
    """Run the per-ring theorem suite on every distinct valid candidate.

    Candidates failing the Krasner axioms are dropped; rings already seen
    (identical tables) are not re-run.  Violations keep their instance
    document in the report archive.
    """
    gen = gen or GeneratorConfig()
    harness = harness or HarnessConfig(seed=gen.seed, products=False)
    result = SearchResult(TheoremReport())
    seen: set[tuple] = set()
    for i, kind, ring in generate(gen, budget):
        result.generated += 1
        stats = result.by_kind.setdefault(kind, [0, 0])
        stats[0] += 1
        if ring is None or not ring.validate().ok:
            continue
        result.valid += 1
        stats[1] += 1
        sig = _signature(ring)
        if sig in seen:
            continue
        seen.add(sig)
        result.distinct += 1
        entry = CorpusEntry(f"rand{i}", ring)
        result.report.merge(run_suite([entry], harness))
    return result


def archive_violations(result: SearchResult) -> dict[str, dict]:
    """Instance documents of every ring with a recorded violation."""
    return dict(result.report.to_dict()["archive"])

