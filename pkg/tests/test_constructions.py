import itertools

import pytest

from krasner.builders import zero_ring, zmod
from krasner.constructions import (
    Homomorphism,
    build_product,
    build_quotient,
    coset_map,
    decompose,
    enumerate_subhyperrings,
    identity_map,
    image_ideal,
    inclusion,
    is_delta_deltaprime_homomorphism,
    preimage_ideal,
    projection,
    validate_homomorphism,
)
from krasner.corpus import load_fixture
from krasner.errors import CapExceededError, NotAHyperidealError
from krasner.expansions import builtin
from krasner.ideals import enumerate_hyperideals


def find_isomorphism(a, b):
    """Brute-force label bijection preserving h, k and zero, or None."""
    if (a.size, a.m, a.n) != (b.size, b.m, b.n):
        return None
    for perm in itertools.permutations(range(b.size)):
        if perm[a.zero] != b.zero:
            continue
        ok = all(
            sum(1 << perm[y] for y in range(a.size) if a.h(*xs) >> y & 1) == b.h(*(perm[x] for x in xs))
            for xs in itertools.combinations_with_replacement(range(a.size), a.m)
        ) and all(
            perm[a.k(*xs)] == b.k(*(perm[x] for x in xs))
            for xs in itertools.combinations_with_replacement(range(a.size), a.n)
        )
        if ok:
            return perm
    return None


def test_quotient_by_zero_is_isomorphic():
    g = load_fixture("z12modH").ring
    q = build_quotient(g, 1 << g.zero)
    assert q.size == g.size
    assert sorted(q.coset_of) == list(range(g.size))
    assert find_isomorphism(g, q) is not None
    assert q.labels[q.coset_of[g.index("3")]] == "3+P"


def test_quotient_by_whole_ring_is_zero_ring():
    z6 = zmod(6)
    q = build_quotient(z6, z6.full)
    assert q.size == 1
    assert q.same_tables(build_quotient(z6, z6.full))
    assert find_isomorphism(q, zero_ring()) is not None


def test_z12_mod_six_is_z6():
    q = build_quotient(zmod(12), (1 << 0) | (1 << 6))
    assert q.size == 6
    assert find_isomorphism(q, zmod(6)) is not None


def test_classical_quotient_oracle():
    # Z12/(4) has cosets r + {0,4,8}; k and h agree with Z4
    z12 = zmod(12)
    q = build_quotient(z12, sum(1 << x for x in (0, 4, 8)))
    for a, b in itertools.product(range(12), repeat=2):
        assert q.h(q.coset_of[a], q.coset_of[b]) == 1 << q.coset_of[(a + b) % 12]
        assert q.k(q.coset_of[a], q.coset_of[b]) == q.coset_of[a * b % 12]


def test_product_lattice_sizes():
    z4 = zmod(4)
    prod = build_product([z4, z4])
    assert len(enumerate_hyperideals(prod)) == 9
    for I in enumerate_hyperideals(prod):
        assert len(decompose(prod, I)) == 2
    g = load_fixture("z12modH").ring
    assert build_product([g, z4]).validate().ok


def test_product_with_zero_ring():
    z4 = zmod(4)
    prod = build_product([z4, zero_ring()])
    assert find_isomorphism(prod, z4) is not None


def test_product_cap():
    with pytest.raises(CapExceededError):
        build_product([zmod(12), zmod(12)], cap=100)
    with pytest.raises(ValueError):
        build_product([zmod(2), load_fixture("z2n3").ring])


def test_homomorphisms():
    g = load_fixture("z12modH").ring
    assert validate_homomorphism(identity_map(g))
    z12 = zmod(12)
    P = (1 << 0) | (1 << 6)
    f = coset_map(build_quotient(z12, P))
    rep = validate_homomorphism(f)
    assert rep and rep.params["surjective"]
    assert f.kernel.mask == P
    swapped = list(range(g.size))
    swapped[g.index("2")], swapped[g.index("3")] = g.index("3"), g.index("2")
    bad = validate_homomorphism(Homomorphism(g, g, tuple(swapped)))
    assert not bad and bad.witness is not None


def test_projection_is_homomorphism():
    prod = build_product([zmod(2), zmod(3)])
    for j in range(2):
        assert validate_homomorphism(projection(prod, j))


def test_delta_deltaprime():
    g = load_fixture("z12modH").ring
    f = identity_map(g)
    for d in ("delta0", "delta1", "deltaR"):
        assert is_delta_deltaprime_homomorphism(f, builtin(d, g), builtin(d, g))
    assert not is_delta_deltaprime_homomorphism(f, builtin("delta0", g), builtin("deltaR", g))
    z12 = zmod(12)
    q = build_quotient(z12, (1 << 0) | (1 << 6))
    f = coset_map(q)
    want = all(
        builtin("delta1", z12).image(f.preimage_mask(I.mask)) == f.preimage_mask(builtin("delta1", q).image(I))
        for I in enumerate_hyperideals(q)
    )
    assert bool(is_delta_deltaprime_homomorphism(f, builtin("delta1", z12), builtin("delta1", q))) == want


def test_preimage_and_image():
    z12 = zmod(12)
    q = build_quotient(z12, (1 << 0) | (1 << 6))
    f = coset_map(q)
    assert preimage_ideal(f, 1 << q.zero) == f.kernel
    evens = sum(1 << x for x in range(0, 12, 2))
    img = image_ideal(f, evens)
    assert sorted(q.labels_of(img.mask)) == ["0+P", "2+P", "4+P"]
    with pytest.raises(NotAHyperidealError):
        image_ideal(f, sum(1 << x for x in (0, 4, 8)))
    ident = identity_map(z12)
    for I in enumerate_hyperideals(z12):
        assert preimage_ideal(ident, I) == I == image_ideal(ident, I)


def test_subhyperrings():
    z6 = zmod(6)
    assert [s.carrier_mask for s in enumerate_subhyperrings(z6)] == [z6.full]
    with pytest.raises(CapExceededError):
        enumerate_subhyperrings(zmod(12))
    f2eps = load_fixture("f2eps").ring
    subs = enumerate_subhyperrings(f2eps)
    assert sorted(tuple(s.labels) for s in subs) == [("0", "1"), ("0", "1", "x", "x+1")]
    for s in subs:
        assert validate_homomorphism(inclusion(s))
