"""Regenerate the shipped fixture corpus under src/krasner/fixtures.

The z12modH sum table is typed in by hand; every other fixture comes from
the builders.  Run from the repository root.
"""

from __future__ import annotations

from pathlib import Path

from krasner.builders import from_ring, poly_ring, zero_ring, zmod, zmod_quotient
from krasner.core import Hyperring
from krasner.ideals import enumerate_hyperideals, radical
from krasner.instance import dump

OUT = Path(__file__).resolve().parent.parent / "src" / "krasner" / "fixtures"

Z12H_LABELS = ["0", "1", "2", "3", "4", "6"]
Z12H_SUM = {
    ("0", "0"): "0", ("0", "1"): "1", ("0", "2"): "2", ("0", "3"): "3", ("0", "4"): "4", ("0", "6"): "6",
    ("1", "1"): "0 2 4 6", ("1", "2"): "1 3", ("1", "3"): "2 4", ("1", "4"): "1 3", ("1", "6"): "1",
    ("2", "2"): "0 4", ("2", "3"): "1", ("2", "4"): "2 6", ("2", "6"): "4",
    ("3", "3"): "0 6", ("3", "4"): "1", ("3", "6"): "3",
    ("4", "4"): "0 4", ("4", "6"): "2",
    ("6", "6"): "0",
}


def z12_mod_h() -> Hyperring:
    idx = {lab: i for i, lab in enumerate(Z12H_LABELS)}
    h = {}
    for (a, b), out in Z12H_SUM.items():
        h[(idx[a], idx[b])] = sum(1 << idx[x] for x in out.split())
    cls = {0: "0", 1: "1", 5: "1", 7: "1", 11: "1", 2: "2", 10: "2", 3: "3", 9: "3", 4: "4", 8: "4", 6: "6"}
    k = {}
    for a in Z12H_LABELS:
        for b in Z12H_LABELS:
            k[(idx[a], idx[b])] = idx[cls[int(a) * int(b) % 12]]
    return Hyperring(2, 2, Z12H_LABELS, h, k, 0, 1, name="z12modH")


def radical_except_zero(ring: Hyperring) -> list[tuple[int, int]]:
    zero = 1 << ring.zero
    return [(I.mask, I.mask if I.mask == zero else radical(ring, I).mask) for I in enumerate_hyperideals(ring)]


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    z12h = z12_mod_h()
    q = z12h.mask_of_labels(["0", "2", "4", "6"])
    dump(z12h, OUT / "z12modH.json", ideals={"Q": q})

    for mod in (2, 3, 4, 6, 12):
        dump(zmod(mod, name=f"z{mod}"), OUT / f"z{mod}.json")
    z8 = zmod(8, name="z8")
    dump(z8, OUT / "z8.json", expansions={"radical_except_zero": radical_except_zero(z8)})

    dump(zmod_quotient(3, [1, 2], name="k3"), OUT / "k3.json")
    dump(zmod_quotient(5, [1, 4], name="z5modpm1"), OUT / "z5modpm1.json")
    dump(zmod_quotient(8, [1, 3, 5, 7], name="z8modU"), OUT / "z8modU.json")

    size, add, mul, labels = poly_ring(2, [0, 0])
    dump(from_ring(size, add, mul, 0, 1, labels, name="f2eps"), OUT / "f2eps.json")

    for mod in (2, 3, 4):
        dump(zmod(mod, n=3, name=f"z{mod}n3"), OUT / f"z{mod}n3.json")
    dump(zmod(3, m=3, name="z3m3"), OUT / "z3m3.json")
    dump(zmod(9, m=3, name="z9m3"), OUT / "z9m3.json")
    dump(zero_ring(), OUT / "zero.json")


if __name__ == "__main__":
    main()
