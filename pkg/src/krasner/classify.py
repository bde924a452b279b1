"""The (t,n)-absorbing hierarchy of hyperideal predicates, each with witnesses.

Throughout, ``w = t(n-1)+1`` is the width of a tested tuple and
``u = (t-1)(n-1)+1`` the width of its sub-products.  k is commutative, so
tuples are enumerated as multisets; a sub-product is the product over a
choice of ``u`` distinct positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Hyperring
from .errors import ArityError, CapExceededError, NotProperError
from .expansions import Expansion
from .ideals import Hyperideal, as_mask, delta_primary_report, enumerate_hyperideals, hyperideal, is_prime, set_product
from .reports import ClassificationReport
from .subsets import is_subset, mask_of, member_list, singleton

LATTICE_CAP = 32


@dataclass(frozen=True)
class AbsorbingParams:
    t: int
    n: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("t must be a positive integer")

    @property
    def w(self) -> int:
        return self.t * self.n - self.t + 1

    @property
    def u(self) -> int:
        return (self.t - 1) * self.n - self.t + 2

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(self.w), self.u))


class _Table:
    """All w-multisets of a ring with their full product and sub-products."""

    def __init__(self, ring: Hyperring, t: int):
        params = AbsorbingParams(t, ring.n)
        self.params = params
        subsets = params.subsets
        self.entries: list[tuple[tuple[int, ...], int, tuple[int, ...]]] = []
        sigs: dict[tuple[int, tuple[int, ...]], tuple[int, ...]] = {}
        product = ring.product
        for xs in itertools.combinations_with_replacement(ring.elements, params.w):
            full = product(xs)
            subs = tuple(product([xs[i] for i in s]) for s in subsets)
            self.entries.append((xs, full, subs))
            sigs.setdefault((full, tuple(sorted(subs))), xs)
        self.sigs = [(full, subs, mask_of(subs), xs) for (full, subs), xs in sigs.items()]


def _table(ring: Hyperring, t: int) -> _Table:
    key = ("wtable", t)
    hit = ring.cache.get(key)
    if hit is None:
        hit = _Table(ring, t)
        ring.cache[key] = hit
    return hit


def _setup(ring: Hyperring, Q) -> Hyperideal:
    ring.require_valid()
    ring.require_identity()
    Q = hyperideal(ring, Q)
    if not Q.is_proper:
        raise NotProperError("the predicates are defined for proper hyperideals only")
    return Q


def _target(delta: Expansion | None, Q: Hyperideal) -> tuple[int, str]:
    if delta is None:
        return Q.mask, "delta0"
    if delta.ring is not Q.ring:
        raise ValueError("expansion is over a different ring")
    return delta.image(Q), delta.name


def _witness(ring, t, xs, target) -> list[tuple[tuple[int, ...], int, bool]]:
    params = AbsorbingParams(t, ring.n)
    out = []
    for s in params.subsets:
        val = ring.iterated_k([xs[i] for i in s])
        out.append((s, val, bool(target >> val & 1)))
    return out


def sub_products(ring: Hyperring, elems: Sequence[int], u: int) -> list[tuple[tuple[int, ...], int]]:
    """The product over every u-subset of positions of ``elems``."""
    if (u - 1) % (ring.n - 1) or (len(elems) - 1) % (ring.n - 1) or u > len(elems):
        raise ArityError(f"widths {len(elems)} and {u} are not admissible for n={ring.n}")
    return [(s, ring.iterated_k([elems[i] for i in s])) for s in itertools.combinations(range(len(elems)), u)]


def _semiprimary(ring: Hyperring, Q: Hyperideal, t: int, target: int, weakly: bool):
    """First failing tuple for: product in Q (nonzero if weakly) forces a sub-product into target."""
    key = ("semi", t, weakly)
    cache = ring.cache.setdefault(key, {})
    hit = cache.get((Q.mask, target), False)
    if hit is not False:
        return hit
    bad = None
    zero = ring.zero
    for full, _subs, submask, xs in _table(ring, t).sigs:
        if Q.mask >> full & 1 and not (weakly and full == zero) and submask & target == 0:
            bad = xs
            break
    cache[(Q.mask, target)] = bad
    return bad


def _report(ring, name, t, delta_name, bad, target, weakly=False) -> ClassificationReport:
    params = {"t": t, "delta": delta_name}
    if weakly:
        params["weakly"] = True
    if bad is None:
        return ClassificationReport(name, True, params=params)
    return ClassificationReport(name, False, params=params, witness=bad, sub_products=_witness(ring, t, bad, target))


def is_tn_absorbing_delta_semiprimary(ring: Hyperring, Q, t: int, delta: Expansion | None = None) -> ClassificationReport:
    Q = _setup(ring, Q)
    target, dname = _target(delta, Q)
    bad = _semiprimary(ring, Q, t, target, weakly=False)
    return _report(ring, "(t,n)-absorbing delta-semiprimary", t, dname, bad, target)


def is_weakly_tn_absorbing_delta_semiprimary(ring: Hyperring, Q, t: int, delta: Expansion | None = None) -> ClassificationReport:
    Q = _setup(ring, Q)
    target, dname = _target(delta, Q)
    bad = _semiprimary(ring, Q, t, target, weakly=True)
    return _report(ring, "weakly (t,n)-absorbing delta-semiprimary", t, dname, bad, target, weakly=True)


def is_semiprimary(ring: Hyperring, Q, t: int, delta: Expansion | None = None, weakly: bool = False) -> bool:
    """Boolean shortcut for the (weakly) semiprimary predicate."""
    Q = _setup(ring, Q)
    target, _ = _target(delta, Q)
    return _semiprimary(ring, Q, t, target, weakly) is None


def is_tn_absorbing(ring: Hyperring, Q, t: int, weakly: bool = False) -> ClassificationReport:
    Q = _setup(ring, Q)
    bad = _semiprimary(ring, Q, t, Q.mask, weakly)
    name = "weakly (t,n)-absorbing" if weakly else "(t,n)-absorbing"
    rep = _report(ring, name, t, "delta0", bad, Q.mask, weakly)
    rep.params.pop("delta")
    return rep


def is_delta_primary(ring: Hyperring, Q, delta: Expansion | None = None) -> ClassificationReport:
    """For every factor outside Q, the product of the other factors lies in delta(Q)."""
    Q = _setup(ring, Q)
    target, dname = _target(delta, Q)
    cache = ring.cache.setdefault("delta_primary", {})
    hit = cache.get((Q.mask, target))
    if hit is None:
        hit = delta_primary_report(ring, Q, target, "n-ary delta-primary")
        hit.params["delta"] = dname
        cache[(Q.mask, target)] = hit
    return hit


def is_tn_absorbing_delta_primary(ring: Hyperring, Q, t: int, delta: Expansion | None = None) -> ClassificationReport:
    """Every ordering of the tuple: leading sub-product in Q, or another one in delta(Q).

    Over multisets this fails exactly when no sub-product lies in delta(Q),
    or exactly one does and that one is not in Q.
    """
    Q = _setup(ring, Q)
    target, dname = _target(delta, Q)
    cache = ring.cache.setdefault(("abs_primary", t), {})
    key = (Q.mask, target)
    bad = cache.get(key, False)
    if bad is False:
        bad = None
        for full, subs, _mask, xs in _table(ring, t).sigs:
            if not Q.mask >> full & 1:
                continue
            hits = [v for v in subs if target >> v & 1]
            if not hits or (len(hits) == 1 and not Q.mask >> hits[0] & 1):
                bad = xs
                break
        cache[key] = bad
    return _report(ring, "(t,n)-absorbing delta-primary", t, dname, bad, target)


# -- strongly variant ------------------------------------------------------


def _set_product_cached(ring: Hyperring, masks: Sequence[int]) -> int:
    cache = ring.cache.setdefault("setprod", {})
    key = tuple(sorted(masks))
    hit = cache.get(key)
    if hit is None:
        hit = set_product(ring, key)
        cache[key] = hit
    return hit


def is_strongly_variant(
    ring: Hyperring, Q, t: int, delta: Expansion | None = None, weakly: bool = False, cap: int = LATTICE_CAP
) -> ClassificationReport:
    """The semiprimary implication with hyperideals in place of elements."""
    Q = _setup(ring, Q)
    target, dname = _target(delta, Q)
    lattice = [I.mask for I in enumerate_hyperideals(ring)]
    if len(lattice) > cap:
        raise CapExceededError(f"ideal lattice of size {len(lattice)} exceeds cap {cap}")
    params = AbsorbingParams(t, ring.n)
    zero = singleton(ring.zero)
    name = ("strongly weakly" if weakly else "strongly") + " (t,n)-absorbing delta-semiprimary"
    rparams = {"t": t, "delta": dname, "weakly": weakly}
    for combo in itertools.combinations_with_replacement(lattice, params.w):
        full = _set_product_cached(ring, combo)
        if not is_subset(full, Q.mask) or (weakly and full == zero):
            continue
        if not any(is_subset(_set_product_cached(ring, [combo[i] for i in s]), target) for s in params.subsets):
            witness = tuple(Hyperideal(ring, c) for c in combo)
            return ClassificationReport(name, False, params=rparams, witness=witness)
    return ClassificationReport(name, True, params=rparams)


# -- delta-(t,n)-zeros -----------------------------------------------------


def find_delta_tn_zeros(ring: Hyperring, Q, t: int, delta: Expansion | None = None) -> list[tuple[int, ...]]:
    """Multisets with zero product and no sub-product in delta(Q), one sorted tuple each.

    The zeros are meaningful for weakly semiprimary Q; other Q are accepted
    for exploration (see ``delta_tn_zero_context``).
    """
    Q = _setup(ring, Q)
    target, _ = _target(delta, Q)
    zero = ring.zero
    return [xs for xs, full, subs in _table(ring, t).entries
            if full == zero and not any(target >> v & 1 for v in subs)]


def delta_tn_zero_context(ring: Hyperring, Q, t: int, delta: Expansion | None = None) -> bool:
    """Whether Q satisfies the weakly-semiprimary hypothesis the zero definition assumes."""
    return is_semiprimary(ring, Q, t, delta, weakly=True)


def is_delta_tn_zero(ring: Hyperring, Q, t: int, delta: Expansion | None, elems: Sequence[int]) -> bool:
    Q = _setup(ring, Q)
    target, _ = _target(delta, Q)
    params = AbsorbingParams(t, ring.n)
    if len(elems) != params.w:
        raise ArityError(f"expected {params.w} elements")
    if ring.product(elems) != ring.zero:
        return False
    return not any(target >> v & 1 for _s, v in sub_products(ring, elems, params.u))


def _zero_set(ring: Hyperring, Q: Hyperideal, t: int, target: int) -> frozenset:
    cache = ring.cache.setdefault(("zeros", t), {})
    key = (Q.mask, target)
    hit = cache.get(key)
    if hit is None:
        zero = ring.zero
        hit = frozenset(xs for xs, full, subs in _table(ring, t).entries
                        if full == zero and not any(target >> v & 1 for v in subs))
        cache[key] = hit
    return hit


def is_free_delta_tn_zero(ring: Hyperring, Q, t: int, delta: Expansion | None, ideals: Sequence) -> bool:
    """No choice of one element per ideal is a delta-(t,n)-zero of Q."""
    Q = _setup(ring, Q)
    target, _ = _target(delta, Q)
    masks = [as_mask(I) for I in ideals]
    params = AbsorbingParams(t, ring.n)
    if len(masks) != params.w:
        raise ArityError(f"expected {params.w} ideals")
    if not is_subset(_set_product_cached(ring, masks), Q.mask):
        raise ValueError("the product of the ideals is not contained in Q")
    return free_of_zeros(ring, Q, t, target, masks)


def free_of_zeros(ring: Hyperring, Q: Hyperideal, t: int, target: int, factor_masks: Sequence[int]) -> bool:
    """No choice tuple from ``factor_masks`` is a delta-(t,n)-zero (target = delta(Q))."""
    zeros = _zero_set(ring, Q, t, target)
    if not zeros:
        return True
    for choice in itertools.product(*(member_list(m) for m in factor_masks)):
        if tuple(sorted(choice)) in zeros:
            return False
    return True


# -- full matrix -----------------------------------------------------------

PREDICATES = (
    "prime",
    "delta-primary",
    "(t,n)-absorbing",
    "(t,n)-absorbing delta-primary",
    "(t,n)-absorbing delta-semiprimary",
    "weakly (t,n)-absorbing delta-semiprimary",
    "strongly (t,n)-absorbing delta-semiprimary",
    "strongly weakly (t,n)-absorbing delta-semiprimary",
)


def classify_all(
    ring: Hyperring, Q, ts: Iterable[int], deltas: Sequence[Expansion], strongly_cap: int = LATTICE_CAP
) -> list[tuple[str, int | None, str | None, ClassificationReport]]:
    """Rows (predicate, t, delta name, report) in a fixed order.

    Strongly-variant rows are omitted when the lattice exceeds ``strongly_cap``.
    The zero ring has no proper hyperideal and gets one failing "proper" row.
    """
    if ring.size == 1:
        ring.require_valid()
        return [("proper", None, None, ClassificationReport("proper", False, note="the zero ring has no proper hyperideal"))]
    Q = _setup(ring, Q)
    rows: list[tuple[str, int | None, str | None, ClassificationReport]] = [("prime", None, None, is_prime(ring, Q))]
    for d in deltas:
        rows.append(("delta-primary", None, d.name, is_delta_primary(ring, Q, d)))
    lattice_small = len(enumerate_hyperideals(ring)) <= strongly_cap
    for t in ts:
        rows.append(("(t,n)-absorbing", t, None, is_tn_absorbing(ring, Q, t)))
        for d in deltas:
            rows.append(("(t,n)-absorbing delta-primary", t, d.name, is_tn_absorbing_delta_primary(ring, Q, t, d)))
            rows.append(("(t,n)-absorbing delta-semiprimary", t, d.name, is_tn_absorbing_delta_semiprimary(ring, Q, t, d)))
            rows.append(("weakly (t,n)-absorbing delta-semiprimary", t, d.name,
                         is_weakly_tn_absorbing_delta_semiprimary(ring, Q, t, d)))
            if lattice_small:
                rows.append(("strongly (t,n)-absorbing delta-semiprimary", t, d.name,
                             is_strongly_variant(ring, Q, t, d, weakly=False, cap=strongly_cap)))
                rows.append(("strongly weakly (t,n)-absorbing delta-semiprimary", t, d.name,
                             is_strongly_variant(ring, Q, t, d, weakly=True, cap=strongly_cap)))
    return rows
