"""Quotient hyperrings, finite cartesian products, homomorphisms and subhyperrings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .core import Hyperring
from .errors import CapExceededError, NotAHyperidealError, StructuralError
from .ideals import Hyperideal, as_mask, enumerate_hyperideals, hyperideal, is_hyperideal
from .reports import ClassificationReport
from .subsets import is_subset, mask_of, member_list, members, singleton

PRODUCT_CAP = 64
SUBRING_CAP = 8


class QuotientRing(Hyperring):
    """G/P with cosets h(g, P, 0, ..., 0) labelled ``rep+name`` by least representative."""

    base: Hyperring
    modulus: Hyperideal
    coset_of: tuple[int, ...]
    cosets: tuple[int, ...]


class ProductRing(Hyperring):
    """Componentwise product; element i has coordinates ``coords[i]``."""

    factors: tuple[Hyperring, ...]
    coords: tuple[tuple[int, ...], ...]
    index_of: dict


def build_quotient(ring: Hyperring, P, name: str = "P") -> QuotientRing:
    ring.require_valid()
    P = hyperideal(ring, P)
    zpad = [singleton(ring.zero)] * (ring.m - 2)
    coset_masks: list[int] = []
    coset_of = [-1] * ring.size
    for g in ring.elements:
        if coset_of[g] >= 0:
            continue
        c = ring.extend([singleton(g), P.mask, *zpad])
        if any(coset_of[x] >= 0 for x in members(c)) or not c >> g & 1:
            raise StructuralError(f"cosets of {P!r} do not partition the carrier")
        for x in members(c):
            coset_of[x] = len(coset_masks)
        coset_masks.append(c)

    size = len(coset_masks)
    reps = [min(members(c)) for c in coset_masks]
    h = {}
    for cs in itertools.combinations_with_replacement(range(size), ring.m):
        out = 0
        for choice in itertools.product(*(member_list(coset_masks[c]) for c in cs)):
            for y in members(ring.h(*choice)):
                out |= singleton(coset_of[y])
        from_reps = 0
        for y in members(ring.h(*(reps[c] for c in cs))):
            from_reps |= singleton(coset_of[y])
        if out != from_reps:
            raise StructuralError(f"induced h depends on representatives at cosets {cs}")
        h[cs] = out
    k = {}
    for cs in itertools.combinations_with_replacement(range(size), ring.n):
        values = {coset_of[ring.k(*choice)] for choice in itertools.product(*(member_list(coset_masks[c]) for c in cs))}
        if len(values) != 1:
            raise StructuralError(f"induced k is not well defined at cosets {cs}")
        k[cs] = values.pop()
    one = coset_of[ring.one] if ring.one is not None else None
    labels = [f"{ring.labels[r]}+{name}" for r in reps]
    q = QuotientRing(ring.m, ring.n, labels, h, k, coset_of[ring.zero], one,
                     name=f"{ring.name}/{name}" if ring.name else "")
    q.base = ring
    q.modulus = P
    q.coset_of = tuple(coset_of)
    q.cosets = tuple(coset_masks)
    q.require_valid()
    return q


def build_product(rings: Sequence[Hyperring], cap: int = PRODUCT_CAP) -> ProductRing:
    if not rings:
        raise ValueError("need at least one factor")
    m, n = rings[0].m, rings[0].n
    if any(r.m != m or r.n != n for r in rings):
        raise ValueError("all factors must share (m, n)")
    total = 1
    for r in rings:
        r.require_valid()
        total *= r.size
    if total > cap:
        raise CapExceededError(f"product carrier of size {total} exceeds cap {cap}")

    coords = list(itertools.product(*(r.elements for r in rings)))
    index_of = {c: i for i, c in enumerate(coords)}
    h = {}
    for xs in itertools.combinations_with_replacement(range(total), m):
        parts = [
            member_list(r.h(*(coords[x][j] for x in xs))) for j, r in enumerate(rings)
        ]
        h[xs] = mask_of(index_of[c] for c in itertools.product(*parts))
    k = {}
    for xs in itertools.combinations_with_replacement(range(total), n):
        k[xs] = index_of[tuple(r.k(*(coords[x][j] for x in xs)) for j, r in enumerate(rings))]
    labels = ["|".join(r.labels[c[j]] for j, r in enumerate(rings)) for c in coords]
    zero = index_of[tuple(r.zero for r in rings)]
    ones = [r.one for r in rings]
    one = index_of[tuple(ones)] if all(o is not None for o in ones) else None
    p = ProductRing(m, n, labels, h, k, zero, one, name=" x ".join(r.name or "?" for r in rings))
    p.factors = tuple(rings)
    p.coords = tuple(coords)
    p.index_of = index_of
    p.require_valid()
    return p


def product_mask(prod: ProductRing, parts: Sequence[int]) -> int:
    """The mask of the cartesian product of one subset per factor."""
    return mask_of(prod.index_of[c] for c in itertools.product(*(member_list(p) for p in parts)))


def project_mask(prod: ProductRing, mask: int, j: int) -> int:
    return mask_of(prod.coords[x][j] for x in members(mask))


def decompose(prod: ProductRing, ideal) -> tuple[Hyperideal, ...]:
    """Split an ideal of a product into factor ideals; StructuralError if it is not a product."""
    mask = as_mask(ideal)
    parts = [project_mask(prod, mask, j) for j in range(len(prod.factors))]
    if product_mask(prod, parts) != mask:
        raise StructuralError(f"{prod.labels_of(mask)} is not a product of factor ideals")
    return tuple(hyperideal(f, p) for f, p in zip(prod.factors, parts))


def product_ideal(prod: ProductRing, ideals: Sequence) -> Hyperideal:
    return Hyperideal(prod, product_mask(prod, [as_mask(I) for I in ideals]))


def verify_product_lattice(prod: ProductRing) -> None:
    """Every ideal of the product is a product of factor ideals, and conversely."""
    lattice = {I.mask for I in enumerate_hyperideals(prod)}
    expected = {
        product_mask(prod, [I.mask for I in combo])
        for combo in itertools.product(*(enumerate_hyperideals(f) for f in prod.factors))
    }
    if lattice != expected:
        raise StructuralError("product ideal lattice is not the product of the factor lattices")


# -- homomorphisms -------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: Hyperring
    target: Hyperring
    mapping: tuple[int, ...]
    name: str = ""

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def image_mask(self, mask: int) -> int:
        return mask_of(self.mapping[x] for x in members(mask))

    def preimage_mask(self, mask: int) -> int:
        return mask_of(x for x in self.source.elements if mask >> self.mapping[x] & 1)

    @property
    def surjective(self) -> bool:
        return self.image_mask(self.source.full) == self.target.full

    @property
    def kernel(self) -> Hyperideal:
        return Hyperideal(self.source, self.preimage_mask(singleton(self.target.zero)))


def validate_homomorphism(f: Homomorphism) -> ClassificationReport:
    src, dst = f.source, f.target
    if len(f.mapping) != src.size or any(not 0 <= y < dst.size for y in f.mapping):
        raise ValueError("mapping is not a total map between the carriers")
    if src.m != dst.m or src.n != dst.n:
        raise ValueError("source and target arities differ")
    name = "homomorphism"
    for xs in itertools.combinations_with_replacement(src.elements, src.m):
        lhs = f.image_mask(src.h(*xs))
        rhs = dst.h(*(f(x) for x in xs))
        if lhs != rhs:
            return ClassificationReport(name, False, witness=xs, note="h not preserved")
    for xs in itertools.combinations_with_replacement(src.elements, src.n):
        if f(src.k(*xs)) != dst.k(*(f(x) for x in xs)):
            return ClassificationReport(name, False, witness=xs, note="k not preserved")
    kernel = f.kernel
    if not is_hyperideal(src, kernel.mask):
        raise StructuralError("kernel of a homomorphism is not a hyperideal")
    return ClassificationReport(name, True, params={"surjective": f.surjective, "kernel": src.labels_of(kernel.mask)})


def identity_map(ring: Hyperring) -> Homomorphism:
    return Homomorphism(ring, ring, tuple(ring.elements), name="id")


def coset_map(q: QuotientRing) -> Homomorphism:
    return Homomorphism(q.base, q, q.coset_of, name="coset")


def projection(prod: ProductRing, j: int) -> Homomorphism:
    return Homomorphism(prod, prod.factors[j], tuple(c[j] for c in prod.coords), name=f"pi{j + 1}")


def preimage_ideal(f: Homomorphism, Q) -> Hyperideal:
    Q = hyperideal(f.target, Q)
    return hyperideal(f.source, f.preimage_mask(Q.mask))


def image_ideal(f: Homomorphism, Q) -> Hyperideal:
    Q = hyperideal(f.source, Q)
    if not f.surjective:
        raise ValueError("image transport needs a surjective homomorphism")
    if not f.kernel <= Q:
        raise NotAHyperidealError("image transport needs an ideal containing the kernel")
    return hyperideal(f.target, f.image_mask(Q.mask))


def is_delta_deltaprime_homomorphism(f: Homomorphism, delta, delta_prime) -> ClassificationReport:
    """delta(f^-1(Q)) == f^-1(delta'(Q)) for every hyperideal Q of the target."""
    name = "delta-delta'-homomorphism"
    for Q in enumerate_hyperideals(f.target):
        pre = f.preimage_mask(Q.mask)
        lhs = delta(Hyperideal(f.source, pre)).mask
        rhs = f.preimage_mask(delta_prime(Q).mask)
        if lhs != rhs:
            return ClassificationReport(name, False, witness=(Q,),
                                        note=f"delta(f^-1 Q)={f.source.labels_of(lhs)} vs f^-1(delta' Q)={f.source.labels_of(rhs)}")
    return ClassificationReport(name, True)


# -- subhyperrings -------------------------------------------------------


class Subhyperring(Hyperring):
    parent: Hyperring
    embedding: tuple[int, ...]
    carrier_mask: int


def restrict(ring: Hyperring, mask: int) -> Subhyperring:
    elems = member_list(mask)
    local = {x: i for i, x in enumerate(elems)}
    h = {
        xs: mask_of(local[y] for y in members(ring.h(*(elems[i] for i in xs))))
        for xs in itertools.combinations_with_replacement(range(len(elems)), ring.m)
    }
    k = {
        xs: local[ring.k(*(elems[i] for i in xs))]
        for xs in itertools.combinations_with_replacement(range(len(elems)), ring.n)
    }
    one = local.get(ring.one) if ring.one is not None else None
    sub = Subhyperring(ring.m, ring.n, [ring.labels[x] for x in elems], h, k, local[ring.zero], one,
                       name=f"{ring.name}[{','.join(ring.labels[x] for x in elems)}]")
    sub.parent = ring
    sub.embedding = tuple(elems)
    sub.carrier_mask = mask
    return sub


def is_subhyperring(ring: Hyperring, mask: int) -> bool:
    if not mask >> ring.zero & 1:
        return False
    elems = member_list(mask)
    for x in elems:
        if not mask >> ring.neg(x) & 1:
            return False
    for xs in itertools.combinations_with_replacement(elems, ring.m):
        if not is_subset(ring.h(*xs), mask):
            return False
    for xs in itertools.combinations_with_replacement(elems, ring.n):
        if not mask >> ring.k(*xs) & 1:
            return False
    return True


def enumerate_subhyperrings(ring: Hyperring, with_identity: bool = True, cap: int = SUBRING_CAP) -> list[Subhyperring]:
    """All subhyperrings (containing the identity unless told otherwise), smallest first."""
    if ring.size > cap:
        raise CapExceededError(f"subhyperring enumeration limited to carriers of size <= {cap}")
    ring.require_valid()
    must = singleton(ring.zero)
    if with_identity:
        must |= singleton(ring.require_identity())
    rest = [x for x in ring.elements if not must >> x & 1]
    found = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            mask = must | mask_of(combo)
            if is_subhyperring(ring, mask):
                sub = restrict(ring, mask)
                if sub.validate().ok:
                    found.append(sub)
    return found


def inclusion(sub: Subhyperring) -> Homomorphism:
    return Homomorphism(sub, sub.parent, sub.embedding, name="incl")


def restrict_ideal(sub: Subhyperring, Q) -> Hyperideal:
    """Q meet G' as a hyperideal of the subhyperring G'."""
    mask = as_mask(Q)
    local = mask_of(i for i, x in enumerate(sub.embedding) if mask >> x & 1)
    return hyperideal(sub, local)
