"""Constructors for concrete hyperrings from classical ring data.

Every builder emits explicit full tables; nothing downstream knows how a
ring was produced.
"""

from __future__ import annotations

import itertools
from functools import reduce
from typing import Callable, Iterable, Sequence

from .core import Hyperring
from .subsets import mask_of

BinOp = Callable[[int, int], int]


def from_ring(
    size: int,
    add: BinOp,
    mul: BinOp,
    zero: int = 0,
    one: int | None = None,
    labels: Sequence[str] | None = None,
    m: int = 2,
    n: int = 2,
    name: str = "",
) -> Hyperring:
    """A commutative ring viewed as a Krasner (m,n)-hyperring with singleton sums."""
    if labels is None:
        labels = [str(i) for i in range(size)]
    h = {xs: 1 << reduce(add, xs) for xs in itertools.combinations_with_replacement(range(size), m)}
    k = {xs: reduce(mul, xs) for xs in itertools.combinations_with_replacement(range(size), n)}
    return Hyperring(m, n, labels, h, k, zero, one, name=name)


def zmod(modulus: int, m: int = 2, n: int = 2, name: str = "") -> Hyperring:
    one = 1 % modulus if modulus > 1 else 0
    return from_ring(
        modulus,
        lambda a, b: (a + b) % modulus,
        lambda a, b: (a * b) % modulus,
        0,
        one,
        m=m,
        n=n,
        name=name or f"Z{modulus}",
    )


def zero_ring(m: int = 2, n: int = 2) -> Hyperring:
    return Hyperring(m, n, ["0"], {(0,) * m: 1}, {(0,) * n: 0}, 0, 0, name="zero")


def krasner_quotient(
    size: int,
    add: BinOp,
    mul: BinOp,
    units: Iterable[int],
    m: int = 2,
    n: int = 2,
    labels: Callable[[int], str] | None = None,
    name: str = "",
) -> Hyperring:
    """The quotient of a commutative ring by a multiplicative group of units.

    Classes are the orbits ``x*U``; each is labelled by its least member.
    The sum of classes is the set of classes of all representative sums.
    """
    units = sorted(set(units))
    cls_of: dict[int, int] = {}
    reps: list[int] = []
    for x in range(size):
        if x in cls_of:
            continue
        orbit = {mul(x, u) for u in units}
        idx = len(reps)
        reps.append(min(orbit))
        for y in orbit:
            cls_of[y] = idx
    members_of = [[x for x in range(size) if cls_of[x] == c] for c in range(len(reps))]

    h = {}
    for cs in itertools.combinations_with_replacement(range(len(reps)), m):
        out = 0
        for choice in itertools.product(*(members_of[c] for c in cs)):
            out |= 1 << cls_of[reduce(add, choice)]
        h[cs] = out
    k = {}
    for cs in itertools.combinations_with_replacement(range(len(reps)), n):
        k[cs] = cls_of[reduce(mul, (reps[c] for c in cs))]
    lab = labels or str
    zero = cls_of[0]
    one = cls_of[1 % size]
    return Hyperring(m, n, [lab(r) for r in reps], h, k, zero, one, name=name)


def zmod_quotient(modulus: int, units: Iterable[int], m: int = 2, n: int = 2, name: str = "") -> Hyperring:
    return krasner_quotient(
        modulus,
        lambda a, b: (a + b) % modulus,
        lambda a, b: (a * b) % modulus,
        units,
        m=m,
        n=n,
        name=name or f"Z{modulus}/U",
    )


def poly_ring(p: int, modulus: Sequence[int]) -> tuple[int, BinOp, BinOp, list[str]]:
    """Arithmetic of F_p[x]/(f) for monic f given by its low coefficients.

    ``modulus`` lists c_0..c_{d-1} of f = x^d + c_{d-1}x^{d-1} + ... + c_0.
    Elements are encoded base p, lowest coefficient first.
    """
    d = len(modulus)
    size = p ** d

    def decode(a: int) -> list[int]:
        return [(a // p ** i) % p for i in range(d)]

    def encode(cs: Sequence[int]) -> int:
        return sum((c % p) * p ** i for i, c in enumerate(cs))

    def add(a: int, b: int) -> int:
        return encode([x + y for x, y in zip(decode(a), decode(b))])

    def mul(a: int, b: int) -> int:
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(decode(a)):
            for j, y in enumerate(decode(b)):
                prod[i + j] += x * y
        for top in range(2 * d - 2, d - 1, -1):
            c = prod[top] % p
            if c:
                for i, mc in enumerate(modulus):
                    prod[top - d + i] -= c * mc
            prod[top] = 0
        return encode(prod[:d])

    def label(a: int) -> str:
        cs = decode(a)
        terms = []
        for i, c in enumerate(cs):
            if c:
                mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
                coef = str(c) if (c != 1 or i == 0) else ""
                terms.append(coef + mono)
        return "+".join(reversed(terms)) or "0"

    return size, add, mul, [label(a) for a in range(size)]


def units_of(size: int, mul: BinOp, one: int = 1) -> list[int]:
    return [a for a in range(size) if any(mul(a, b) == one for b in range(size))]


def subgroup_generated(gens: Iterable[int], mul: BinOp, one: int = 1) -> list[int]:
    group = {one}
    frontier = [one]
    gens = list(gens)
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = mul(x, g)
            if y not in group:
                group.add(y)
                frontier.append(y)
    return sorted(group)


def subset_mask(ring: Hyperring, labels: Iterable[str]) -> int:
    return mask_of(ring.index(x) for x in labels)
