import itertools

import pytest

from krasner.builders import from_ring, zero_ring, zmod
from krasner.core import Hyperring, extend_hyperop_to_subsets, find_scalar_identity, validate_canonical_hypergroup
from krasner.corpus import fixture_names, load_fixture
from krasner.errors import ArityError, AxiomError, MissingIdentityError, TableError

from oracle import MODELS


@pytest.fixture(scope="module")
def g():
    return load_fixture("z12modH").ring


def lab(ring, *labels):
    return ring.mask_of_labels(labels)


def test_extend_trivial_z4():
    z4 = zmod(4)
    assert z4.labels_of(z4.extend([lab(z4, "0", "2"), lab(z4, "1")])) == ["1", "3"]


def test_extend_classes(g):
    assert g.labels_of(g.extend([lab(g, "1"), lab(g, "1")])) == ["0", "2", "4", "6"]


@pytest.mark.parametrize("name", fixture_names())
def test_extend_zero_is_neutral(name):
    ring = load_fixture(name).ring
    for x in ring.elements:
        assert ring.extend([1 << ring.zero] * (ring.m - 1) + [1 << x]) == 1 << x


def test_extend_rejects_bad_arguments(g):
    with pytest.raises(ArityError):
        g.extend([1])
    with pytest.raises(ValueError):
        extend_hyperop_to_subsets(g, [0, 1])


@pytest.mark.parametrize("name", sorted(MODELS))
def test_fixture_tables_match_modular_model(name):
    model, ring = MODELS[name](), load_fixture(name).ring
    for xs in itertools.product(range(model.size), repeat=model.m):
        got = ring.labels_of(ring.h(*(ring.index(model.labels[x]) for x in xs)))
        assert sorted(got) == sorted(model.labels[y] for y in model.h(*xs))
    for xs in itertools.product(range(model.size), repeat=model.n):
        got = ring.labels[ring.k(*(ring.index(model.labels[x]) for x in xs))]
        assert got == model.labels[model.prod(xs)]


@pytest.mark.parametrize("name", fixture_names())
def test_every_fixture_validates(name):
    assert load_fixture(name).ring.validate().ok


def test_z12modH_hypergroup_passes(g):
    assert validate_canonical_hypergroup(g).ok


def _perturbed(ring, hkey=None, hval=None, kkey=None, kval=None):
    h, k = ring.h_table(), ring.k_table()
    if hkey is not None:
        h[tuple(sorted(ring.index(x) for x in hkey))] = ring.mask_of_labels(hval)
    if kkey is not None:
        k[tuple(sorted(ring.index(x) for x in kkey))] = ring.index(kval)
    return Hyperring(ring.m, ring.n, ring.labels, h, k, ring.zero, ring.one)


def test_perturbed_sum_fails_with_witness(g):
    bad = _perturbed(g, hkey=("2", "2"), hval=["0"])
    report = validate_canonical_hypergroup(bad)
    assert not report.ok
    failed = {c.name for c in report.failures()}
    assert failed & {"h-reversible", "h-unique-inverse", "h-associative"}
    assert all(c.witness for c in report.failures())


def test_perturbed_product_fails(g):
    bad = _perturbed(g, kkey=("3", "4"), kval="6")
    report = bad.validate()
    assert not report.ok
    assert {c.name for c in report.failures()} & {"k-distributive", "k-associative"}
    with pytest.raises(AxiomError):
        bad.require_valid()


def test_z6_validates():
    assert zmod(6).validate().ok


def test_iterated_k(g):
    assert g.labels[g.iterated_k([g.index("2"), g.index("2"), g.index("3")])] == "0"
    assert g.iterated_k([g.index("4")]) == g.index("4")
    one = g.one
    assert g.iterated_k([one, one, one]) == one
    with pytest.raises(ArityError):
        load_fixture("z2n3").ring.iterated_k([0, 1])


@pytest.mark.parametrize("name", ["z4n3", "z9m3", "z12"])
def test_iterated_k_order_independent(name):
    ring = load_fixture(name).ring
    length = 2 * (ring.n - 1) + 1
    for xs in itertools.product(ring.elements, repeat=length):
        values = {ring.iterated_k(list(p)) for p in itertools.permutations(xs)}
        assert len(values) == 1


def test_pad_product(g):
    two, six = g.index("2"), g.index("6")
    assert g.pad_product([two, six]) == g.k(two, six) == g.zero
    assert g.pad_product([two]) == two
    with pytest.raises(ArityError):
        g.pad_product([two, two, two])


def test_scalar_identity(g):
    assert g.labels[find_scalar_identity(g)] == "1"
    assert zmod(4).one == 1
    # the rng 2Z8 = {0,2,4,6} has no identity
    rng = from_ring(4, lambda a, b: (a + b) % 4, lambda a, b: (2 * a * b) % 4, labels=["0", "2", "4", "6"])
    assert rng.validate().ok
    assert find_scalar_identity(rng) is None
    with pytest.raises(MissingIdentityError):
        rng.pad_product([1])


def test_zero_ring():
    z = zero_ring()
    assert z.validate().ok and z.size == 1


def test_missing_table_entry_is_rejected():
    with pytest.raises(TableError):
        Hyperring(2, 2, ["0", "1"], {(0, 0): 1}, {(0, 0): 0, (0, 1): 0, (1, 1): 1}, 0)
