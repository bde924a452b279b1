"""Hyperideals: membership tests, closures, the ideal lattice, primes and radicals."""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .core import Hyperring
from .errors import ArityError, CapExceededError, NotAHyperidealError, NotProperError
from .reports import ClassificationReport
from .subsets import is_subset, mask_of, member_list, members, popcount, singleton, sort_key

EXHAUSTIVE_LIMIT = 16
HARD_CAP = 64


class Hyperideal:
    """A hyperideal of a fixed ring, stored as a bit mask.  Immutable."""

    __slots__ = ("ring", "mask")

    def __init__(self, ring: Hyperring, mask: int):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("Hyperideal is immutable")

    def __eq__(self, other) -> bool:
        return isinstance(other, Hyperideal) and other.ring is self.ring and other.mask == self.mask

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self) -> Iterator[int]:
        return members(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __le__(self, other: "Hyperideal") -> bool:
        return is_subset(self.mask, other.mask)

    def __lt__(self, other: "Hyperideal") -> bool:
        return self.mask != other.mask and self <= other

    def __and__(self, other: "Hyperideal") -> "Hyperideal":
        return Hyperideal(self.ring, self.mask & other.mask)

    @property
    def is_proper(self) -> bool:
        return self.mask != self.ring.full

    @property
    def is_zero(self) -> bool:
        return self.mask == singleton(self.ring.zero)

    def labels(self) -> list[str]:
        return self.ring.labels_of(self.mask)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def as_mask(x) -> int:
    return x.mask if isinstance(x, Hyperideal) else int(x)


def _absorb_masks(ring: Hyperring) -> list[int]:
    """For each q, the set of all products k(q, g_2, ..., g_n)."""
    hit = ring.cache.get("absorb")
    if hit is None:
        hit = []
        for q in ring.elements:
            out = 0
            for gs in itertools.combinations_with_replacement(ring.elements, ring.n - 1):
                out |= singleton(ring.k(q, *gs))
            hit.append(out)
        ring.cache["absorb"] = hit
    return hit


def _h_closed(ring: Hyperring, mask: int) -> tuple[int, ...] | None:
    """Return an m-tuple of members whose h escapes ``mask``, or None."""
    elems = member_list(mask)
    for xs in itertools.combinations_with_replacement(elems, ring.m):
        if not is_subset(ring.h(*xs), mask):
            return xs
    return None


def is_hyperideal(ring: Hyperring, subset) -> ClassificationReport:
    mask = as_mask(subset)
    if mask == 0:
        raise ValueError("subset is empty")
    ring.require_valid()
    name = "hyperideal"
    if not mask >> ring.zero & 1:
        return ClassificationReport(name, False, witness=(ring.zero,), note="zero not a member")
    bad = _h_closed(ring, mask)
    if bad is not None:
        return ClassificationReport(name, False, witness=bad, note="not closed under h")
    for x in members(mask):
        if not mask >> ring.neg(x) & 1:
            return ClassificationReport(name, False, witness=(x,), note="inverse not a member")
    for q in members(mask):
        for gs in itertools.combinations_with_replacement(ring.elements, ring.n - 1):
            if not mask >> ring.k(q, *gs) & 1:
                return ClassificationReport(name, False, witness=(q, *gs), note="not absorbing under k")
    return ClassificationReport(name, True)


def hyperideal(ring: Hyperring, subset) -> Hyperideal:
    """Wrap ``subset`` (mask, label list or Hyperideal) after checking it is a hyperideal."""
    if isinstance(subset, Hyperideal):
        return subset
    if not isinstance(subset, int):
        subset = ring.mask_of_labels(subset)
    lattice = ring.cache.get("lattice_masks")
    if lattice is not None and subset in lattice:
        return Hyperideal(ring, subset)
    report = is_hyperideal(ring, subset)
    if not report:
        raise NotAHyperidealError(f"{ring.labels_of(subset)} is not a hyperideal: {report.note}")
    return Hyperideal(ring, subset)


def zero_ideal(ring: Hyperring) -> Hyperideal:
    return Hyperideal(ring, singleton(ring.zero))


def whole(ring: Hyperring) -> Hyperideal:
    return Hyperideal(ring, ring.full)


def closure(ring: Hyperring, gens: int) -> int:
    """Least hyperideal containing ``gens`` (no identity needed)."""
    ring.require_valid()
    absorb = _absorb_masks(ring)
    cur = gens | singleton(ring.zero)
    while True:
        nxt = cur
        for x in members(cur):
            nxt |= absorb[x] | singleton(ring.neg(x))
        elems = member_list(nxt)
        for xs in itertools.combinations_with_replacement(elems, ring.m):
            nxt |= ring.h(*xs)
        if nxt == cur:
            return cur
        cur = nxt


def principal_set(ring: Hyperring, g: int) -> int:
    """{k(r, g, 1, ..., 1) : r in G}."""
    one = ring.require_identity()
    ones = (one,) * (ring.n - 2)
    return mask_of(ring.k(r, g, *ones) for r in ring.elements)


def generated_ideal(ring: Hyperring, gens) -> Hyperideal:
    ring.require_identity()
    if isinstance(gens, Hyperideal):
        gens = gens.mask
    elif not isinstance(gens, int):
        gens = mask_of(gens)
    one = ring.one
    ones = (one,) * (ring.n - 2)
    cur = gens | singleton(ring.zero)
    while True:
        nxt = cur
        for g in members(cur):
            nxt |= singleton(ring.neg(g))
            for r in ring.elements:
                nxt |= singleton(ring.k(r, g, *ones))
        for xs in itertools.combinations_with_replacement(member_list(nxt), ring.m):
            nxt |= ring.h(*xs)
        if nxt == cur:
            return Hyperideal(ring, cur)
        cur = nxt


def principal_ideal(ring: Hyperring, g: int) -> Hyperideal:
    return generated_ideal(ring, singleton(g))


def _enumerate_exhaustive(ring: Hyperring) -> list[int]:
    absorb = _absorb_masks(ring)
    negs = [ring.neg(x) for x in ring.elements]
    zbit = singleton(ring.zero)
    others = [x for x in ring.elements if x != ring.zero]
    found = []
    for r in range(len(others) + 1):
        for combo in itertools.combinations(others, r):
            mask = zbit | mask_of(combo)
            ok = True
            for x in combo:
                if not is_subset(absorb[x], mask) or not mask >> negs[x] & 1:
                    ok = False
                    break
            if ok and _h_closed(ring, mask) is None:
                found.append(mask)
    return found


def _enumerate_bfs(ring: Hyperring) -> list[int]:
    start = closure(ring, 0)
    principal = {g: closure(ring, singleton(g)) for g in ring.elements}
    seen = {start}
    queue = [start]
    while queue:
        cur = queue.pop()
        for g in ring.elements:
            if cur >> g & 1:
                continue
            nxt = closure(ring, cur | principal[g])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return list(seen)


def enumerate_hyperideals(ring: Hyperring, method: str = "auto", cap: int = HARD_CAP) -> list[Hyperideal]:
    """All hyperideals sorted by size, then by member indices."""
    if ring.size > cap:
        raise CapExceededError(f"carrier of size {ring.size} exceeds cap {cap}")
    ring.require_valid()
    if method == "auto":
        method = "exhaustive" if ring.size <= EXHAUSTIVE_LIMIT else "bfs"
    key = ("lattice", method)
    masks = ring.cache.get(key)
    if masks is None:
        masks = _enumerate_exhaustive(ring) if method == "exhaustive" else _enumerate_bfs(ring)
        masks = sorted(masks, key=sort_key)
        ring.cache[key] = masks
        ring.cache["lattice_masks"] = frozenset(masks)
    return [Hyperideal(ring, m) for m in masks]


def proper_ideals(ring: Hyperring) -> list[Hyperideal]:
    return [I for I in enumerate_hyperideals(ring) if I.is_proper]


# -- primes, primaries, radicals -----------------------------------------


def _flag_cache(ring: Hyperring, name: str) -> dict:
    return ring.cache.setdefault(("flags", name), {})


def _coordinate_signatures(ring: Hyperring) -> list[tuple[int, int, tuple[int, ...]]]:
    """Distinct (product, coordinate mask) over all n-multisets, with a witness each."""
    hit = ring.cache.get("nsig")
    if hit is None:
        seen: dict[tuple[int, int], tuple[int, ...]] = {}
        for xs in itertools.combinations_with_replacement(ring.elements, ring.n):
            seen.setdefault((ring.k(*xs), mask_of(xs)), xs)
        hit = [(p, c, w) for (p, c), w in seen.items()]
        ring.cache["nsig"] = hit
    return hit


def _require_proper(ideal: Hyperideal) -> None:
    if not ideal.is_proper:
        raise NotProperError("the ideal is the whole ring")


def is_prime(ring: Hyperring, P) -> ClassificationReport:
    P = hyperideal(ring, P)
    _require_proper(P)
    cache = _flag_cache(ring, "prime")
    hit = cache.get(P.mask)
    if hit is not None:
        return hit
    report = ClassificationReport("n-ary prime", True)
    for prod, coords, witness in _coordinate_signatures(ring):
        if P.mask >> prod & 1 and coords & P.mask == 0:
            report = ClassificationReport("n-ary prime", False, witness=witness,
                                          note="product in P, no factor in P")
            break
    cache[P.mask] = report
    return report


def primes(ring: Hyperring) -> list[Hyperideal]:
    return [P for P in proper_ideals(ring) if is_prime(ring, P)]


def radical(ring: Hyperring, I) -> Hyperideal:
    """Intersection of all n-ary prime hyperideals containing I (G if there are none)."""
    I = hyperideal(ring, I)
    cache = ring.cache.setdefault("radical", {})
    hit = cache.get(I.mask)
    if hit is None:
        hit = ring.full
        for P in primes(ring):
            if I <= P:
                hit &= P.mask
        cache[I.mask] = hit
    return Hyperideal(ring, hit)


def radical_membership(ring: Hyperring, g: int, I) -> bool:
    """Whether some power of g (padded with the identity) lies in I.

    The power sequence is deterministic in its last value, so it is walked
    until the first repeat.
    """
    mask = as_mask(I)
    one = ring.require_identity()
    ones = (one,) * (ring.n - 2)
    seen = set()
    p = g
    while p not in seen:
        if mask >> p & 1:
            return True
        seen.add(p)
        p = ring.k(p, g, *ones)
    return False


def radical_by_powers(ring: Hyperring, I) -> Hyperideal:
    mask = as_mask(I)
    return Hyperideal(ring, mask_of(g for g in ring.elements if radical_membership(ring, g, mask)))


def _primary_signatures(ring: Hyperring) -> list[tuple[int, tuple[tuple[int, int], ...], tuple[int, ...]]]:
    """For each n-multiset: product and the (factor, product with that factor replaced by 1) pairs."""
    hit = ring.cache.get("primary_sig")
    if hit is None:
        one = ring.require_identity()
        seen: dict = {}
        for xs in itertools.combinations_with_replacement(ring.elements, ring.n):
            pairs = []
            for i in range(ring.n):
                if i and xs[i] == xs[i - 1]:
                    continue
                pairs.append((xs[i], ring.k(*xs[:i], one, *xs[i + 1:])))
            seen.setdefault((ring.k(*xs), tuple(pairs)), xs)
        hit = [(p, pairs, w) for (p, pairs), w in seen.items()]
        ring.cache["primary_sig"] = hit
    return hit


def delta_primary_report(ring: Hyperring, Q: Hyperideal, target: int, name: str) -> ClassificationReport:
    """Every factor outside Q forces the product of the others into ``target``."""
    for prod, pairs, witness in _primary_signatures(ring):
        if not Q.mask >> prod & 1:
            continue
        for g, rest in pairs:
            if not Q.mask >> g & 1 and not target >> rest & 1:
                return ClassificationReport(name, False, witness=witness,
                                            note=f"factor {ring.labels[g]} outside Q and the rest "
                                                 f"({ring.labels[rest]}) outside the target")
    return ClassificationReport(name, True)


def is_primary(ring: Hyperring, I) -> ClassificationReport:
    I = hyperideal(ring, I)
    _require_proper(I)
    ring.require_identity()
    cache = _flag_cache(ring, "primary")
    hit = cache.get(I.mask)
    if hit is None:
        hit = delta_primary_report(ring, I, radical(ring, I).mask, "n-ary primary")
        cache[I.mask] = hit
    return hit


# -- products of subsets -------------------------------------------------


def set_product(ring: Hyperring, factors: Sequence[int]) -> int:
    """All iterated k-products with one factor chosen from each subset."""
    length = len(factors)
    if length < 1 or (length - 1) % (ring.n - 1):
        raise ArityError(f"{length} factors is not of the form l*(n-1)+1 for n={ring.n}")
    acc = factors[0]
    step = ring.n - 1
    for i in range(1, length, step):
        chunk = factors[i:i + step]
        out = 0
        for a in members(acc):
            for rest in itertools.product(*(member_list(c) for c in chunk)):
                out |= singleton(ring.k(a, *rest))
        acc = out
    return acc


def ideal_product(ring: Hyperring, ideals: Iterable) -> int:
    """The elementwise product set of a list of hyperideals, as a mask."""
    return set_product(ring, [as_mask(I) for I in ideals])
