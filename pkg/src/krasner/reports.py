from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ClassificationReport:
    """Verdict of one predicate plus a replayable witness when it fails.

    ``sub_products`` lists, for a failing element tuple, every admissible
    position subset with its product and whether that product landed in the
    target set (usually delta(Q)).
    """

    predicate: str
    verdict: bool
    params: dict = field(default_factory=dict)
    witness: tuple | None = None
    sub_products: list[tuple[tuple[int, ...], int, bool]] | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self, ring=None) -> dict:
        d: dict = {"predicate": self.predicate, "verdict": "pass" if self.verdict else "fail"}
        if self.params:
            d["params"] = dict(sorted(self.params.items()))
        if self.witness is not None:
            d["witness"] = [_label(w, ring) for w in self.witness]
        if self.sub_products is not None:
            d["sub_products"] = [
                {"positions": [p + 1 for p in pos], "product": _label(val, ring), "in_target": hit}
                for pos, val, hit in self.sub_products
            ]
        if self.note:
            d["note"] = self.note
        return d


def _label(value, ring):
    if ring is None:
        return value
    if isinstance(value, int):
        return ring.labels[value]
    # ideal witnesses are masks wrapped in a frozenset-like object with .mask
    mask = getattr(value, "mask", None)
    if mask is not None:
        return ring.labels_of(mask)
    return value
