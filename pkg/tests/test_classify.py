import itertools

import pytest

from krasner.builders import zero_ring, zmod
from krasner.classify import (
    AbsorbingParams,
    classify_all,
    find_delta_tn_zeros,
    is_delta_primary,
    is_delta_tn_zero,
    is_free_delta_tn_zero,
    is_strongly_variant,
    is_tn_absorbing,
    is_tn_absorbing_delta_primary,
    is_tn_absorbing_delta_semiprimary,
    is_weakly_tn_absorbing_delta_semiprimary,
    sub_products,
)
from krasner.corpus import load_fixture
from krasner.errors import ArityError, CapExceededError, NotProperError
from krasner.expansions import builtin, from_pairs
from krasner.ideals import enumerate_hyperideals

from oracle import MODELS, from_ring_mask, to_ring_mask

DELTAS = ("delta0", "delta1", "deltaR")


@pytest.fixture(scope="module")
def g():
    return load_fixture("z12modH").ring


def L(ring, *labels):
    return ring.mask_of_labels(labels)


def test_widths():
    p = AbsorbingParams(2, 2)
    assert (p.w, p.u) == (3, 2)
    p = AbsorbingParams(3, 4)
    assert (p.w, p.u) == (10, 7)
    assert AbsorbingParams(1, 5).u == 1
    with pytest.raises(ValueError):
        AbsorbingParams(0, 2)


def test_sub_products(g):
    xs = [g.index(x) for x in ("2", "2", "3")]
    got = {pos: g.labels[v] for pos, v in sub_products(g, xs, 2)}
    assert got == {(0, 1): "4", (0, 2): "6", (1, 2): "6"}
    assert [v for _, v in sub_products(g, xs, 1)] == xs
    one = g.one
    assert {v for _, v in sub_products(g, [one] * 3, 2)} == {one}
    with pytest.raises(ArityError):
        sub_products(load_fixture("z2n3").ring, [0, 1, 1], 2)


def test_classes_example(g):
    Q = L(g, "0", "2", "4", "6")
    assert is_tn_absorbing_delta_semiprimary(g, Q, 2, builtin("delta1", g))
    assert is_tn_absorbing_delta_semiprimary(g, Q, 2, builtin("deltaR", g))


def test_delta_primary_examples():
    z4 = zmod(4)
    assert is_delta_primary(z4, 0b1, builtin("delta1", z4))
    z12 = zmod(12)
    rep = is_delta_primary(z12, (1 << 0) | (1 << 6), builtin("delta0", z12))
    assert not rep and sorted(rep.witness) == [2, 3]


def test_absorbing_primary_z12_zero():
    z12 = zmod(12)
    rep = is_tn_absorbing_delta_primary(z12, 1, 2, builtin("delta0", z12))
    assert not rep
    model = MODELS["z12"]()
    Q = frozenset({0})
    assert not model.absorbing_primary(Q, 2, Q)
    # the tuple (2,2,3) fails under every ordering
    for xs in set(itertools.permutations((2, 2, 3))):
        assert model.prod(xs) == 0
        assert model.prod(xs[:2]) != 0
        assert all(model.prod([xs[i] for i in s]) != 0 for s in ((0, 2), (1, 2)))


def _replay_semi(ring, rep, Q, target, weakly=False):
    xs = rep.witness
    full = ring.product(xs)
    assert Q >> full & 1
    if weakly:
        assert full != ring.zero
    assert rep.sub_products
    assert all(not hit and not target >> v & 1 for _pos, v, hit in rep.sub_products)


def _cases(max_t3=6):
    for name in sorted(MODELS):
        model = MODELS[name]()
        for t in (1, 2, 3):
            if t == 3 and (model.size > max_t3 or model.n > 2):
                continue
            yield name, t


@pytest.mark.parametrize("name,t", list(_cases()))
def test_predicates_against_oracle(name, t):
    model, ring = MODELS[name](), load_fixture(name).ring
    for S in model.ideals():
        if S == model.full():
            continue
        Q = to_ring_mask(model, ring, S)
        targets = model.targets(S)
        assert bool(is_tn_absorbing(ring, Q, t)) == model.semiprimary(S, t, S)
        assert bool(is_tn_absorbing(ring, Q, t, weakly=True)) == model.semiprimary(S, t, S, weakly=True)
        for dname in DELTAS:
            delta = builtin(dname, ring)
            tgt = targets[dname]
            assert delta.image(Q) == to_ring_mask(model, ring, tgt)
            semi = is_tn_absorbing_delta_semiprimary(ring, Q, t, delta)
            assert bool(semi) == model.semiprimary(S, t, tgt), (dname, sorted(S))
            if not semi:
                _replay_semi(ring, semi, Q, delta.image(Q))
            weak = is_weakly_tn_absorbing_delta_semiprimary(ring, Q, t, delta)
            assert bool(weak) == model.semiprimary(S, t, tgt, weakly=True), (dname, sorted(S))
            if not weak:
                _replay_semi(ring, weak, Q, delta.image(Q), weakly=True)
            ap = is_tn_absorbing_delta_primary(ring, Q, t, delta)
            assert bool(ap) == model.absorbing_primary(S, t, tgt), (dname, sorted(S))
            if t == 1:
                assert bool(is_delta_primary(ring, Q, delta)) == model.delta_primary(S, tgt)
            zeros = {tuple(sorted(ring.index(model.labels[x]) for x in z)) for z in model.zeros(S, t, tgt)}
            assert set(find_delta_tn_zeros(ring, Q, t, delta)) == zeros


def test_custom_expansion_against_oracle():
    ring = load_fixture("z8").ring
    inst = load_fixture("z8")
    delta = from_pairs(ring, "radical_except_zero", inst.expansions["radical_except_zero"])
    model = MODELS["z8"]()
    for S in model.ideals():
        if S == model.full():
            continue
        Q = to_ring_mask(model, ring, S)
        tgt = from_ring_mask(model, ring, delta.image(Q))
        for t in (1, 2):
            assert bool(is_tn_absorbing_delta_semiprimary(ring, Q, t, delta)) == model.semiprimary(S, t, tgt)


def test_default_delta_is_identity(g):
    Q = L(g, "0", "4")
    assert bool(is_tn_absorbing_delta_semiprimary(g, Q, 2)) == \
        bool(is_tn_absorbing_delta_semiprimary(g, Q, 2, builtin("delta0", g)))


def test_proper_required(g):
    with pytest.raises(NotProperError):
        is_tn_absorbing_delta_semiprimary(g, g.full, 1)


def _strong_oracle(ring, Q, t, target, weakly):
    params = AbsorbingParams(t, ring.n)
    lattice = [set(I) for I in enumerate_hyperideals(ring)]

    def prodset(ideals):
        return {ring.iterated_k(list(c)) for c in itertools.product(*ideals)}

    for combo in itertools.product(lattice, repeat=params.w):
        full = prodset(combo)
        if not full <= Q or (weakly and full == {ring.zero}):
            continue
        if not any(prodset([combo[i] for i in s]) <= target for s in params.subsets):
            return False
    return True


@pytest.mark.parametrize("name", ["z4", "z6", "z8", "z12modH", "f2eps"])
@pytest.mark.parametrize("weakly", [False, True])
def test_strongly_variant_against_oracle(name, weakly):
    ring = load_fixture(name).ring
    for I in enumerate_hyperideals(ring):
        if not I.is_proper:
            continue
        for dname in DELTAS:
            delta = builtin(dname, ring)
            target = set(delta(I))
            for t in (1, 2):
                got = bool(is_strongly_variant(ring, I, t, delta, weakly=weakly))
                assert got == _strong_oracle(ring, set(I), t, target, weakly)


def test_strongly_variant_cap():
    ring = zmod(12)
    with pytest.raises(CapExceededError):
        is_strongly_variant(ring, 1, 1, cap=3)


def test_strongly_examples():
    z4 = zmod(4)
    assert is_strongly_variant(z4, 0b101, 2, builtin("deltaR", z4))
    assert is_strongly_variant(z4, 0b1, 1, builtin("delta0", z4), weakly=True)


def test_zeros_examples():
    z4 = zmod(4)
    d0 = builtin("delta0", z4)
    zeros = find_delta_tn_zeros(z4, 0b1, 2, d0)
    assert (1, 2, 2) not in zeros
    model = MODELS["z4"]()
    assert set(zeros) == model.zeros(frozenset({0}), 2, frozenset({0}))
    assert find_delta_tn_zeros(z4, 0b1, 2, builtin("deltaR", z4)) == []
    for xs in zeros:
        assert is_delta_tn_zero(z4, 0b1, 2, d0, xs)
    assert not is_delta_tn_zero(z4, 0b1, 2, d0, (1, 2, 2))
    with pytest.raises(ArityError):
        is_delta_tn_zero(z4, 0b1, 2, d0, (1, 2))


def test_free_zero_against_choice_scan():
    ring = zmod(8)
    lattice = enumerate_hyperideals(ring)
    for Q in lattice:
        if not Q.is_proper:
            continue
        for dname in DELTAS:
            delta = builtin(dname, ring)
            for combo in itertools.combinations_with_replacement(lattice, 3):
                prod = {ring.iterated_k(list(c)) for c in itertools.product(*combo)}
                if not prod <= set(Q):
                    with pytest.raises(ValueError):
                        is_free_delta_tn_zero(ring, Q, 2, delta, combo)
                    continue
                want = not any(is_delta_tn_zero(ring, Q, 2, delta, c) for c in itertools.product(*combo))
                assert is_free_delta_tn_zero(ring, Q, 2, delta, combo) == want
                if dname == "deltaR":
                    assert want


def test_classify_all(g):
    Q = L(g, "0", "2", "4", "6")
    deltas = [builtin(d, g) for d in DELTAS]
    rows = classify_all(g, Q, (1, 2), deltas)
    cell = {(p, t, d): r.verdict for p, t, d, r in rows}
    assert cell[("(t,n)-absorbing delta-semiprimary", 2, "delta1")]
    assert rows == classify_all(g, Q, (1, 2), deltas)
    assert [p for p, *_ in classify_all(zero_ring(), 1, (1,), [])] == ["proper"]


def test_classify_all_z12_cells_against_oracle():
    ring, model = zmod(12), MODELS["z12"]()
    deltas = [builtin(d, ring) for d in DELTAS]
    names = {
        "(t,n)-absorbing delta-semiprimary": lambda S, t, tgt: model.semiprimary(S, t, tgt),
        "weakly (t,n)-absorbing delta-semiprimary": lambda S, t, tgt: model.semiprimary(S, t, tgt, weakly=True),
        "(t,n)-absorbing delta-primary": lambda S, t, tgt: model.absorbing_primary(S, t, tgt),
    }
    for S in model.ideals():
        if S == model.full():
            continue
        Q = to_ring_mask(model, ring, S)
        for p, t, d, r in classify_all(ring, Q, (1, 2), deltas):
            if p in names:
                assert r.verdict == names[p](S, t, model.targets(S)[d])
            elif p == "prime":
                assert r.verdict == model.is_prime(S)
