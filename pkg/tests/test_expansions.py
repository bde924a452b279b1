import pytest

from krasner.builders import zmod
from krasner.constructions import build_product, build_quotient
from krasner.corpus import fixture_names, load_fixture
from krasner.errors import ExpansionError
from krasner.expansions import (
    Expansion,
    builtin,
    from_pairs,
    has_P_property,
    is_intersection_preserving,
    product_expansion,
    quotient_expansion,
    validate_expansion,
)
from krasner.ideals import enumerate_hyperideals, radical

CLASSIFIABLE = [n for n in fixture_names() if n != "zero"]


@pytest.mark.parametrize("name", CLASSIFIABLE)
def test_builtins_validate_and_preserve_meets(name):
    ring = load_fixture(name).ring
    for d in ("delta0", "delta1", "deltaR"):
        delta = builtin(d, ring)
        assert validate_expansion(ring, delta)
        assert is_intersection_preserving(ring, delta)
    for I in enumerate_hyperideals(ring):
        assert builtin("delta0", ring).image(I) == I.mask
        assert builtin("delta1", ring).image(I) == radical(ring, I).mask
        assert builtin("deltaR", ring).image(I) == ring.full


def test_builtin_values_z4():
    z4 = zmod(4)
    assert builtin("delta1", z4)(0b1).labels() == ["0", "2"]
    assert has_P_property(z4, builtin("delta0", z4))
    assert has_P_property(z4, builtin("delta1", z4))
    assert not has_P_property(z4, builtin("deltaR", z4))
    with pytest.raises(ExpansionError):
        builtin("delta9", z4)


def test_non_monotone_map_is_rejected():
    z4 = zmod(4)
    bad = from_pairs(z4, "bad", [(0b1, z4.full), (0b101, 0b101), (z4.full, z4.full)])
    rep = validate_expansion(z4, bad)
    assert not rep
    assert rep.note == "not monotone"
    assert [I.labels() for I in rep.witness] == [["0"], ["0", "2"]]


def test_non_inflationary_map_is_rejected():
    z4 = zmod(4)
    bad = from_pairs(z4, "shrink", [(0b1, 0b1), (0b101, 0b1), (z4.full, z4.full)])
    assert validate_expansion(z4, bad).note == "not inflationary"


def test_expansion_table_must_cover_lattice():
    z4 = zmod(4)
    with pytest.raises(ExpansionError):
        Expansion(z4, "partial", {0b1: 0b1})
    with pytest.raises(ExpansionError):
        Expansion(z4, "offlattice", {0b1: 0b11, 0b101: 0b101, z4.full: z4.full})
    with pytest.raises(ExpansionError):
        from_pairs(z4, "twice", [(0b1, 0b1), (0b1, 0b101)])


def test_quotient_expansion():
    z12 = zmod(12)
    J = (1 << 0) | (1 << 6)
    q = build_quotient(z12, J)
    d0q = quotient_expansion(builtin("delta0", z12), q)
    for I in enumerate_hyperideals(q):
        assert d0q.image(I) == I.mask
    d1q = quotient_expansion(builtin("delta1", z12), q)
    zero_coset = 1 << q.zero
    assert d1q.image(zero_coset) == zero_coset
    for I in enumerate_hyperideals(q):
        pre = 0
        for c in I:
            pre |= q.cosets[c]
        img = builtin("delta1", z12).image(pre)
        assert d1q.image(I) == sum(1 << c for c in {q.coset_of[x] for x in range(12) if img >> x & 1})


def test_product_expansion():
    z4 = zmod(4)
    prod = build_product([z4, z4])
    d0, d1, dR = (builtin(d, z4) for d in ("delta0", "delta1", "deltaR"))
    e00 = product_expansion([d0, d0], prod)
    assert all(e00.image(I) == I.mask for I in enumerate_hyperideals(prod))
    eRR = product_expansion([dR, dR], prod)
    assert all(eRR.image(I) == prod.full for I in enumerate_hyperideals(prod))
    e11 = product_expansion([d1, d1], prod)
    src = prod.mask_of_labels(["0|0", "0|2"])
    assert sorted(prod.labels_of(e11.image(src))) == ["0|0", "0|2", "2|0", "2|2"]
    with pytest.raises(ValueError):
        product_expansion([d0], prod)
