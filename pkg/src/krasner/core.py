"""Finite commutative Krasner (m,n)-hyperrings and their axiom checks.

A ring is given by explicit tables: ``h`` sends every sorted m-tuple of
element indices to a nonempty subset (a bit mask) and ``k`` sends every
sorted n-tuple to an element.  Elements are the dense indices ``0..N-1``;
labels are kept only for display and serialization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ArityError, AxiomError, MissingIdentityError, TableError
from .subsets import full_mask, mask_of, member_list, members, singleton

Tuple = tuple[int, ...]


@dataclass(frozen=True)
class Check:
    """Verdict of one named axiom.  Failures carry a replayable witness."""

    name: str
    passed: bool
    witness: Tuple | None = None
    lhs: object = None
    rhs: object = None
    note: str = ""

    def to_dict(self, ring: "Hyperring | None" = None) -> dict:
        d: dict = {"axiom": self.name, "verdict": "pass" if self.passed else "fail"}
        if not self.passed:
            d["witness"] = list(self.witness) if ring is None else [ring.labels[i] for i in self.witness or ()]
            d["lhs"] = _render(self.lhs, ring)
            d["rhs"] = _render(self.rhs, ring)
            if self.note:
                d["note"] = self.note
        return d


def _render(value, ring):
    if ring is None or value is None:
        return value
    if isinstance(value, int):
        return ring.labels_of(value)
    return value


@dataclass
class AxiomReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def summary(self) -> str:
        bad = self.failures()
        if not bad:
            return "all axioms pass"
        return "failed: " + ", ".join(c.name for c in bad)

    def extend(self, other: "AxiomReport") -> None:
        self.checks.extend(other.checks)


class Hyperring:
    """A finite commutative Krasner (m,n)-hyperring given by full tables.

    ``h`` maps m-tuples of indices to nonempty masks and ``k`` maps n-tuples
    to indices.  Keys may be in any order; every sorted tuple must be
    present.  Two permutations of a tuple mapped to different values are
    kept as conflicts and fail the commutativity check.
    """

    def __init__(
        self,
        m: int,
        n: int,
        labels: Sequence[str],
        h: Mapping[Tuple, int],
        k: Mapping[Tuple, int],
        zero: int,
        one: int | None = None,
        name: str = "",
    ):
        if m < 2 or n < 2:
            raise TableError(f"arities must be at least 2, got m={m}, n={n}")
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise TableError("carrier is empty")
        if len(set(labels)) != len(labels):
            raise TableError("duplicate carrier labels")
        size = len(labels)
        if not 0 <= zero < size:
            raise TableError(f"zero index {zero} out of range")
        if one is not None and not 0 <= one < size:
            raise TableError(f"identity index {one} out of range")

        self.m, self.n, self.labels, self.zero, self.name = m, n, labels, zero, name
        self.size = size
        self.full = full_mask(size)
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._h, self._h_conflicts = self._canonical(h, m, "h", is_set=True)
        self._k, self._k_conflicts = self._canonical(k, n, "k", is_set=False)
        self._one = one
        self._one_searched = one is not None
        self._report: AxiomReport | None = None
        self._neg: list[int] | None = None
        self._ext_cache: dict[tuple[int, ...], int] = {}
        self._prod_cache: dict[Tuple, int] = {}
        # per-ring caches used by the other modules (ideal lattice, radicals, ...)
        self.cache: dict = {}

    def _canonical(self, table, arity, what, is_set):
        canon: dict[Tuple, int] = {}
        conflicts: list[tuple[Tuple, Tuple]] = []
        first_key: dict[Tuple, Tuple] = {}
        for key, value in table.items():
            key = tuple(key)
            if len(key) != arity:
                raise TableError(f"{what}: key {key} has arity {len(key)}, expected {arity}")
            if any(not 0 <= x < self.size for x in key):
                raise TableError(f"{what}: key {key} out of range")
            if is_set:
                if not isinstance(value, int):
                    value = mask_of(value)
                if value == 0:
                    raise TableError(f"{what}: entry for {key} is empty")
                if value >> self.size:
                    raise TableError(f"{what}: entry for {key} out of range")
            elif not 0 <= value < self.size:
                raise TableError(f"{what}: entry for {key} out of range")
            skey = tuple(sorted(key))
            if skey in canon:
                if canon[skey] != value:
                    conflicts.append((first_key[skey], key))
                continue
            canon[skey] = value
            first_key[skey] = key
        for skey in itertools.combinations_with_replacement(range(self.size), arity):
            if skey not in canon:
                raise TableError(f"{what}: missing entry for {skey}")
        return canon, conflicts

    # -- basic access -------------------------------------------------

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"<Hyperring{tag} m={self.m} n={self.n} N={self.size}>"

    @property
    def elements(self) -> range:
        return range(self.size)

    def index(self, label: str) -> int:
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown label {label!r}") from None

    def mask_of_labels(self, labels: Iterable[str]) -> int:
        return mask_of(self.index(x) for x in labels)

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in members(mask)]

    def h(self, *args: int) -> int:
        """The hyperoperation on elements; returns a mask."""
        if len(args) != self.m:
            raise ArityError(f"h takes {self.m} arguments, got {len(args)}")
        return self._h[tuple(sorted(args))]

    def k(self, *args: int) -> int:
        if len(args) != self.n:
            raise ArityError(f"k takes {self.n} arguments, got {len(args)}")
        return self._k[tuple(sorted(args))]

    def h_table(self) -> dict[Tuple, int]:
        return dict(self._h)

    def k_table(self) -> dict[Tuple, int]:
        return dict(self._k)

    # -- derived operations -------------------------------------------

    def extend(self, args: Sequence[int]) -> int:
        """h applied to m subsets: the union of h over all choice tuples."""
        if len(args) != self.m:
            raise ArityError(f"h takes {self.m} subsets, got {len(args)}")
        if any(a == 0 for a in args):
            raise ValueError("empty argument subset")
        key = tuple(sorted(args))
        hit = self._ext_cache.get(key)
        if hit is not None:
            return hit
        out = 0
        for choice in itertools.product(*(member_list(a) for a in key)):
            out |= self._h[tuple(sorted(choice))]
        self._ext_cache[key] = out
        return out

    def iterated_k(self, elems: Sequence[int]) -> int:
        """Left-nested k over a list of length l(n-1)+1."""
        length = len(elems)
        if length < 1 or (length - 1) % (self.n - 1):
            raise ArityError(f"length {length} is not of the form l*(n-1)+1 for n={self.n}")
        acc = elems[0]
        step = self.n - 1
        for i in range(1, length, step):
            acc = self._k[tuple(sorted((acc, *elems[i:i + step])))]
        return acc

    def product(self, elems: Sequence[int]) -> int:
        """Iterated k of a multiset, memoized on the sorted tuple.

        Only meaningful on validated rings, where k is commutative and
        associative and the nesting order does not matter.
        """
        key = tuple(sorted(elems))
        hit = self._prod_cache.get(key)
        if hit is None:
            hit = self.iterated_k(key)
            self._prod_cache[key] = hit
        return hit

    def power(self, g: int, s: int) -> int:
        """g multiplied with itself s times, padded with the identity."""
        one = self.require_identity()
        step = self.n - 1
        length = s if (s - 1) % step == 0 else s + step - (s - 1) % step
        return self.product([g] * s + [one] * (length - s))

    def pad_product(self, elems: Sequence[int]) -> int:
        one = self.require_identity()
        s = len(elems)
        if not 1 <= s <= self.n:
            raise ArityError(f"pad_product takes 1..{self.n} elements, got {s}")
        return self.k(*elems, *([one] * (self.n - s)))

    def neg(self, x: int) -> int:
        """The additive inverse of x (first y with 0 in h(x, y, 0, ...))."""
        if self._neg is None:
            self._neg = _inverses(self)
        value = self._neg[x]
        if value < 0:
            raise AxiomError(self.validate())
        return value

    # -- identity -----------------------------------------------------

    @property
    def one(self) -> int | None:
        if not self._one_searched:
            self._one = _search_identity(self)
            self._one_searched = True
        return self._one

    def require_identity(self) -> int:
        one = self.one
        if one is None:
            raise MissingIdentityError(f"{self!r} has no scalar identity")
        return one

    # -- validation ---------------------------------------------------

    def validate(self) -> AxiomReport:
        if self._report is None:
            self._report = validate_krasner(self)
        return self._report

    @property
    def validated(self) -> bool:
        return self.validate().ok

    def require_valid(self) -> "Hyperring":
        report = self.validate()
        if not report.ok:
            raise AxiomError(report)
        return self

    def same_tables(self, other: "Hyperring") -> bool:
        return (
            self.m == other.m and self.n == other.n and self.labels == other.labels
            and self.zero == other.zero and self._h == other._h and self._k == other._k
        )


def _inverses(ring: Hyperring) -> list[int]:
    pad = (ring.zero,) * (ring.m - 2)
    zbit = singleton(ring.zero)
    out = []
    for x in ring.elements:
        cands = [y for y in ring.elements if ring.h(x, y, *pad) & zbit]
        out.append(cands[0] if len(cands) == 1 else -1)
    return out


def _search_identity(ring: Hyperring) -> int | None:
    for e in ring.elements:
        rest = (e,) * (ring.n - 1)
        if all(ring.k(g, *rest) == g for g in ring.elements):
            return e
    return None


# -- public operation surface ------------------------------------------


def extend_hyperop_to_subsets(ring: Hyperring, args: Sequence[int]) -> int:
    return ring.extend(args)


def iterated_k(ring: Hyperring, elems: Sequence[int]) -> int:
    return ring.iterated_k(elems)


def pad_product(ring: Hyperring, elems: Sequence[int]) -> int:
    return ring.pad_product(elems)


def find_scalar_identity(ring: Hyperring) -> int | None:
    return ring.one


def validate_canonical_hypergroup(ring: Hyperring) -> AxiomReport:
    """Commutativity, m-ary associativity, neutral zero, unique inverses, reversibility."""
    m, z = ring.m, ring.zero
    report = AxiomReport()

    if ring._h_conflicts:
        a, b = ring._h_conflicts[0]
        report.checks.append(Check("h-commutative", False, a, ring._h[tuple(sorted(a))], b,
                                   note=f"permutation {b} of {a} was given a different entry"))
    else:
        report.checks.append(Check("h-commutative", True))

    report.checks.append(_check_h_assoc(ring))

    zeros = (z,) * (m - 1)
    bad = next((x for x in ring.elements if ring.h(x, *zeros) != singleton(x)), None)
    if bad is None:
        report.checks.append(Check("h-neutral-zero", True))
    else:
        report.checks.append(Check("h-neutral-zero", False, (bad, *zeros), ring.h(bad, *zeros), singleton(bad)))

    other = next(
        (e for e in ring.elements if e != z and all(ring.h(x, *(e,) * (m - 1)) == singleton(x) for x in ring.elements)),
        None,
    )
    if other is None:
        report.checks.append(Check("h-unique-neutral", True))
    else:
        report.checks.append(Check("h-unique-neutral", False, (other,), note="second neutral element"))

    pad = (z,) * (m - 2)
    inv: list[int] = []
    inv_check = Check("h-unique-inverse", True)
    for x in ring.elements:
        cands = [y for y in ring.elements if ring.h(x, y, *pad) >> z & 1]
        if len(cands) != 1:
            inv_check = Check("h-unique-inverse", False, (x,), mask_of(cands), None,
                              note=f"{len(cands)} elements y with zero in h(x, y, 0...)")
            break
        inv.append(cands[0])
    report.checks.append(inv_check)

    if not inv_check.passed:
        report.checks.append(Check("h-reversible", False, inv_check.witness, note="inverses not unique"))
    else:
        report.checks.append(_check_reversible(ring, inv))
    return report


def _check_h_assoc(ring: Hyperring) -> Check:
    m = ring.m
    for xs in itertools.product(ring.elements, repeat=2 * m - 1):
        singles = [singleton(x) for x in xs]
        first = None
        for i in range(m):
            inner = ring.h(*xs[i:i + m])
            value = ring.extend(singles[:i] + [inner] + singles[i + m:])
            if first is None:
                first = value
            elif value != first:
                return Check("h-associative", False, xs, first, value, note=f"nesting at position 1 vs {i + 1}")
    return Check("h-associative", True)


def _check_reversible(ring: Hyperring, inv: list[int]) -> Check:
    m = ring.m
    for xs in itertools.combinations_with_replacement(ring.elements, m):
        for y in members(ring.h(*xs)):
            for i in range(m):
                others = [inv[xs[j]] for j in range(m) if j != i]
                back = ring.h(y, *others)
                if not back >> xs[i] & 1:
                    return Check("h-reversible", False, (*xs, y), back, singleton(xs[i]),
                                 note=f"position {i + 1} not recovered from h(y, -others)")
    return Check("h-reversible", True)


def validate_krasner(ring: Hyperring) -> AxiomReport:
    """Full Krasner (m,n)-hyperring check: hypergroup, semigroup, distributivity, zero."""
    report = validate_canonical_hypergroup(ring)
    n, z = ring.n, ring.zero

    if ring._k_conflicts:
        a, b = ring._k_conflicts[0]
        report.checks.append(Check("k-commutative", False, a, ring._k[tuple(sorted(a))], b,
                                   note=f"permutation {b} of {a} was given a different entry"))
    else:
        report.checks.append(Check("k-commutative", True))

    assoc = Check("k-associative", True)
    for xs in itertools.product(ring.elements, repeat=2 * n - 1):
        first = None
        for i in range(n):
            inner = ring.k(*xs[i:i + n])
            value = ring.k(*xs[:i], inner, *xs[i + n:])
            if first is None:
                first = value
            elif value != first:
                assoc = Check("k-associative", False, xs, singleton(first), singleton(value),
                              note=f"nesting at position 1 vs {i + 1}")
                break
        if not assoc.passed:
            break
    report.checks.append(assoc)

    report.checks.append(_check_distributive(ring))

    absorb = Check("k-zero-absorbing", True)
    for gs in itertools.product(ring.elements, repeat=n - 1):
        for i in range(n):
            args = (*gs[:i], z, *gs[i:])
            if ring.k(*args) != z:
                absorb = Check("k-zero-absorbing", False, args, singleton(ring.k(*args)), singleton(z))
                break
        if not absorb.passed:
            break
    report.checks.append(absorb)

    if ring._one is not None:
        one = ring._one
        bad = next((g for g in ring.elements if ring.k(g, *(one,) * (n - 1)) != g), None)
        if bad is None:
            report.checks.append(Check("k-scalar-identity", True))
        else:
            args = (bad, *(one,) * (n - 1))
            report.checks.append(Check("k-scalar-identity", False, args, singleton(ring.k(*args)), singleton(bad)))
    return report


def _check_distributive(ring: Hyperring) -> Check:
    m, n = ring.m, ring.n
    for gs in itertools.product(ring.elements, repeat=n - 1):
        for i in range(n):
            left, right = gs[:i], gs[i:]
            for xs in itertools.combinations_with_replacement(ring.elements, m):
                lhs = 0
                for s in members(ring.h(*xs)):
                    lhs |= singleton(ring.k(*left, s, *right))
                rhs = ring.h(*(ring.k(*left, x, *right) for x in xs))
                if lhs != rhs:
                    return Check("k-distributive", False, (*gs, *xs), lhs, rhs,
                                 note=f"k at position {i + 1} over h")
    return Check("k-distributive", True)


def require_valid(ring: Hyperring) -> Hyperring:
    return ring.require_valid()

