"""Hyperideal expansions: inflationary, monotone self-maps of the ideal lattice."""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .constructions import ProductRing, QuotientRing, decompose, product_mask, verify_product_lattice
from .core import Hyperring
from .errors import ExpansionError, StructuralError
from .ideals import Hyperideal, as_mask, enumerate_hyperideals, radical
from .reports import ClassificationReport
from .subsets import is_subset

BUILTINS = ("delta0", "delta1", "deltaR")


class Expansion:
    """A total lookup table from the ideal lattice of ``ring`` to itself."""

    def __init__(self, ring: Hyperring, name: str, table: dict[int, int]):
        self.ring = ring
        self.name = name
        lattice = {I.mask for I in enumerate_hyperideals(ring)}
        missing = lattice - table.keys()
        if missing:
            raise ExpansionError(f"{name}: no image for ideal {ring.labels_of(min(missing))}")
        extra = table.keys() - lattice
        if extra:
            raise ExpansionError(f"{name}: {ring.labels_of(min(extra))} is not a hyperideal")
        for src, dst in table.items():
            if dst not in lattice:
                raise ExpansionError(f"{name}: image {ring.labels_of(dst)} of {ring.labels_of(src)} is not a hyperideal")
        self.table = dict(table)
        self._report: ClassificationReport | None = None

    def __call__(self, ideal) -> Hyperideal:
        return Hyperideal(self.ring, self.table[as_mask(ideal)])

    def __repr__(self) -> str:
        return f"<Expansion {self.name} on {self.ring!r}>"

    def image(self, ideal) -> int:
        return self.table[as_mask(ideal)]

    @property
    def validated(self) -> bool:
        if self._report is None:
            self._report = validate_expansion(self.ring, self)
        return self._report.verdict


def from_pairs(ring: Hyperring, name: str, pairs: Iterable[tuple[int, int]]) -> Expansion:
    table: dict[int, int] = {}
    for src, dst in pairs:
        if src in table and table[src] != dst:
            raise ExpansionError(f"{name}: two images given for {ring.labels_of(src)}")
        table[src] = dst
    return Expansion(ring, name, table)


def validate_expansion(ring: Hyperring, delta: Expansion) -> ClassificationReport:
    name = "expansion"
    lattice = enumerate_hyperideals(ring)
    for I in lattice:
        if not is_subset(I.mask, delta.image(I)):
            return ClassificationReport(name, False, params={"delta": delta.name}, witness=(I,), note="not inflationary")
    for I, J in itertools.product(lattice, repeat=2):
        if I <= J and not is_subset(delta.image(I), delta.image(J)):
            return ClassificationReport(name, False, params={"delta": delta.name}, witness=(I, J), note="not monotone")
    return ClassificationReport(name, True, params={"delta": delta.name})


def builtin(name: str, ring: Hyperring) -> Expansion:
    cache = ring.cache.setdefault("builtin_expansions", {})
    if name in cache:
        return cache[name]
    lattice = enumerate_hyperideals(ring)
    if name == "delta0":
        table = {I.mask: I.mask for I in lattice}
    elif name == "delta1":
        table = {I.mask: radical(ring, I).mask for I in lattice}
    elif name == "deltaR":
        table = {I.mask: ring.full for I in lattice}
    else:
        raise ExpansionError(f"unknown built-in expansion {name!r}")
    delta = Expansion(ring, name, table)
    if not delta.validated:
        raise ExpansionError(f"built-in {name} failed validation on {ring!r}")
    cache[name] = delta
    return delta


def quotient_expansion(delta: Expansion, q: QuotientRing) -> Expansion:
    """delta_q(I/J) = delta(I)/J, through the correspondence of ideals containing J."""
    if delta.ring is not q.base:
        raise ValueError("expansion and quotient are over different rings")
    table = {}
    for I in enumerate_hyperideals(q):
        pre = 0
        for c in I:
            pre |= q.cosets[c]
        if not is_subset(q.modulus.mask, pre):
            raise StructuralError("preimage of a quotient ideal does not contain the modulus")
        img = delta.image(pre)
        table[I.mask] = sum(1 << c for c in {q.coset_of[x] for x in range(q.base.size) if img >> x & 1})
    out = Expansion(q, f"{delta.name}_q", table)
    if not out.validated:
        raise ExpansionError("quotient expansion failed validation")
    return out


def product_expansion(deltas: Sequence[Expansion], prod: ProductRing) -> Expansion:
    """Componentwise expansion on a product: delta(Q1 x ... x Qs) = delta1(Q1) x ... x deltas(Qs)."""
    if len(deltas) != len(prod.factors) or any(d.ring is not f for d, f in zip(deltas, prod.factors)):
        raise ValueError("one expansion per factor, over that factor")
    verify_product_lattice(prod)
    table = {}
    for I in enumerate_hyperideals(prod):
        parts = decompose(prod, I)
        table[I.mask] = product_mask(prod, [d.image(p) for d, p in zip(deltas, parts)])
    out = Expansion(prod, "x".join(d.name for d in deltas), table)
    if not out.validated:
        raise ExpansionError("product expansion failed validation")
    return out


def is_intersection_preserving(ring: Hyperring, delta: Expansion) -> ClassificationReport:
    name = "intersection-preserving"
    lattice = enumerate_hyperideals(ring)
    for P, Q in itertools.combinations_with_replacement(lattice, 2):
        meet = P.mask & Q.mask
        if delta.image(meet) != delta.image(P) & delta.image(Q):
            return ClassificationReport(name, False, params={"delta": delta.name}, witness=(P, Q))
    return ClassificationReport(name, True, params={"delta": delta.name})


def has_P_property(ring: Hyperring, delta: Expansion) -> bool:
    """delta(Q) = G exactly when Q = G."""
    return all((delta.image(I) == ring.full) == (I.mask == ring.full) for I in enumerate_hyperideals(ring))


def is_idempotent_at(delta: Expansion, ideal) -> bool:
    img = delta.image(ideal)
    return delta.image(img) == img
