"""Hypothesis properties over the shipped fixtures and random relabellings."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from krasner.classify import (
    AbsorbingParams,
    is_semiprimary,
    is_tn_absorbing_delta_primary,
    is_tn_absorbing_delta_semiprimary,
)
from krasner.core import Hyperring
from krasner.corpus import fixture_names, load_fixture
from krasner.expansions import builtin
from krasner.ideals import enumerate_hyperideals, ideal_product, proper_ideals, radical, radical_by_powers
from krasner.instance import dumps, loads
from krasner.subsets import members

NAMES = [n for n in fixture_names() if n != "zero" and load_fixture(n).ring.size <= 9]
RINGS = {n: load_fixture(n).ring for n in NAMES}
for _r in RINGS.values():
    _r.require_valid()

ring_names = st.sampled_from(NAMES)
ts = st.integers(min_value=1, max_value=2)
deltas = st.sampled_from(["delta0", "deltaR", "delta1"])
common = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def relabel(ring, perm):
    """The same ring with element i renamed to perm[i]."""
    labels = [None] * ring.size
    for i, lab in enumerate(ring.labels):
        labels[perm[i]] = lab
    h = {tuple(perm[x] for x in xs): sum(1 << perm[y] for y in members(v)) for xs, v in ring.h_table().items()}
    k = {tuple(perm[x] for x in xs): perm[v] for xs, v in ring.k_table().items()}
    one = None if ring.one is None else perm[ring.one]
    return Hyperring(ring.m, ring.n, labels, h, k, perm[ring.zero], one)


def move(mask, perm):
    return sum(1 << perm[x] for x in members(mask))


@st.composite
def ring_and_ideal(draw):
    ring = RINGS[draw(ring_names)]
    Q = draw(st.sampled_from(proper_ideals(ring)))
    return ring, Q


@common
@given(ring_names, st.data())
def test_product_ignores_order(name, data):
    ring = RINGS[name]
    length = data.draw(st.sampled_from([ring.n, 2 * ring.n - 1]))
    xs = data.draw(st.lists(st.integers(0, ring.size - 1), min_size=length, max_size=length))
    shuffled = data.draw(st.permutations(xs))
    assert ring.iterated_k(xs) == ring.iterated_k(shuffled)
    ys = data.draw(st.lists(st.integers(0, ring.size - 1), min_size=ring.m, max_size=ring.m))
    assert ring.h(*ys) == ring.h(*data.draw(st.permutations(ys)))


@common
@given(ring_and_ideal(), ts, deltas)
def test_implication_chain(pair, t, dname):
    ring, Q = pair
    delta = builtin(dname, ring)
    absorbing_primary = bool(is_tn_absorbing_delta_primary(ring, Q, t, delta))
    semi = is_semiprimary(ring, Q, t, delta)
    weak = is_semiprimary(ring, Q, t, delta, weakly=True)
    assert not absorbing_primary or semi
    assert not semi or weak
    assert not semi or is_semiprimary(ring, Q, t + 1, delta)


@common
@given(ring_and_ideal(), ts)
def test_larger_expansion_is_weaker(pair, t):
    ring, Q = pair
    verdicts = [is_semiprimary(ring, Q, t, builtin(d, ring)) for d in ("delta0", "delta1", "deltaR")]
    assert verdicts == sorted(verdicts)
    assert verdicts[-1]


@common
@given(ring_and_ideal())
def test_builtin_expansions_contain_argument(pair):
    ring, Q = pair
    images = [builtin(d, ring).image(Q) for d in ("delta0", "delta1", "deltaR")]
    assert images[0] == Q.mask
    assert images[0] & ~images[1] == 0 and images[1] & ~images[2] == 0


@common
@given(ring_names)
def test_radical_two_ways(name):
    ring = RINGS[name]
    for I in enumerate_hyperideals(ring):
        assert radical(ring, I) == radical_by_powers(ring, I)
        assert I <= radical(ring, I)
        assert radical(ring, radical(ring, I)) == radical(ring, I)


@common
@given(ring_names, st.randoms(use_true_random=False))
def test_relabelling_preserves_everything(name, rnd):
    ring = RINGS[name]
    perm = list(range(ring.size))
    rnd.shuffle(perm)
    other = relabel(ring, perm)
    assert other.validate().ok
    assert sorted(move(I.mask, perm) for I in enumerate_hyperideals(ring)) == sorted(
        I.mask for I in enumerate_hyperideals(other)
    )
    for Q in proper_ideals(ring):
        Q2 = move(Q.mask, perm)
        assert move(radical(ring, Q).mask, perm) == radical(other, Q2).mask
        for t in (1, 2):
            assert is_semiprimary(ring, Q, t) == is_semiprimary(other, Q2, t)


@common
@given(ring_names)
def test_serialisation_round_trip(name):
    ring = RINGS[name]
    again = loads(dumps(ring)).ring
    assert again.same_tables(ring)
    assert dumps(again) == dumps(ring)


@common
@given(ring_and_ideal(), ts, deltas)
def test_witness_replays(pair, t, dname):
    ring, Q = pair
    delta = builtin(dname, ring)
    rep = is_tn_absorbing_delta_semiprimary(ring, Q, t, delta)
    if rep.verdict:
        return
    xs = rep.witness
    assert len(xs) == AbsorbingParams(t, ring.n).w
    assert ring.iterated_k(list(xs)) in Q
    target = delta.image(Q)
    assert all(not target >> val & 1 for _, val, _ in rep.sub_products)


@common
@given(ring_names, st.data())
def test_ideal_product_is_inside_each_factor(name, data):
    ring = RINGS[name]
    lattice = enumerate_hyperideals(ring)
    factors = data.draw(st.lists(st.sampled_from(lattice), min_size=ring.n, max_size=ring.n))
    prod = ideal_product(ring, factors)
    for I in factors:
        assert prod & ~I.mask == 0
