"""Instance files: JSON documents describing a hyperring plus named extras.

Layout::

    {
      "m": 2, "n": 2,
      "carrier": ["0", "1", ...],
      "zero": "0", "one": "1",
      "h": {"0,1": ["1"], ...},        # every sorted m-tuple, labels joined by ","
      "k": {"0,1": "0", ...},          # every sorted n-tuple
      "ideals": {"Q": ["0", "2"]},     # optional
      "expansions": {"mine": [[["0"], ["0", "2"]], ...]}   # optional
    }

Labels may not contain commas.  Missing tuples are load errors.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

from .core import Hyperring
from .errors import InstanceFormatError, TableError
from .subsets import members

RESERVED_EXPANSIONS = ("delta0", "delta1", "deltaR")


@dataclass
class Instance:
    ring: Hyperring
    ideals: dict[str, int] = field(default_factory=dict)
    expansions: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    source: str = ""


def _key(labels) -> str:
    return ",".join(labels)


def parse(doc: dict, name: str = "") -> Instance:
    if not isinstance(doc, dict):
        raise InstanceFormatError("top level must be an object")
    for fld in ("m", "n", "carrier", "zero", "h", "k"):
        if fld not in doc:
            raise InstanceFormatError("missing required field", fld)
    m, n = doc["m"], doc["n"]
    for fld, v in (("m", m), ("n", n)):
        if not isinstance(v, int) or v < 2:
            raise InstanceFormatError("must be an integer >= 2", fld)
    carrier = doc["carrier"]
    if not isinstance(carrier, list) or not carrier:
        raise InstanceFormatError("must be a nonempty list of labels", "carrier")
    carrier = [str(x) for x in carrier]
    for lab in carrier:
        if "," in lab:
            raise InstanceFormatError(f"label {lab!r} contains a comma", "carrier")
    if len(set(carrier)) != len(carrier):
        raise InstanceFormatError("duplicate labels", "carrier")
    index = {lab: i for i, lab in enumerate(carrier)}

    def lookup(lab, where):
        try:
            return index[str(lab)]
        except KeyError:
            raise InstanceFormatError(f"unknown label {lab!r}", where) from None

    zero = lookup(doc["zero"], "zero")
    one = lookup(doc["one"], "one") if doc.get("one") is not None else None

    def read_table(fld, arity, is_set):
        table = doc[fld]
        if not isinstance(table, dict):
            raise InstanceFormatError("must be an object", fld)
        out = {}
        for key, value in table.items():
            where = f"{fld}[{key!r}]"
            parts = key.split(",")
            if len(parts) != arity:
                raise InstanceFormatError(f"expected {arity} labels", where)
            idx = tuple(lookup(p.strip(), where) for p in parts)
            if is_set:
                if not isinstance(value, list) or not value:
                    raise InstanceFormatError("must be a nonempty list of labels", where)
                out[idx] = sum(1 << lookup(v, where) for v in set(map(str, value)))
            else:
                out[idx] = lookup(value, where)
        present = {tuple(sorted(key)) for key in out}
        for combo in itertools.combinations_with_replacement(range(len(carrier)), arity):
            if combo not in present:
                raise InstanceFormatError(f"missing entry for ({_key(carrier[i] for i in combo)})", fld)
        return out

    h = read_table("h", m, True)
    k = read_table("k", n, False)
    try:
        ring = Hyperring(m, n, carrier, h, k, zero, one, name=name or str(doc.get("name", "")))
    except TableError as exc:
        raise InstanceFormatError(str(exc)) from exc

    ideals = {}
    for nm, labs in (doc.get("ideals") or {}).items():
        if not isinstance(labs, list):
            raise InstanceFormatError("must be a list of labels", f"ideals[{nm!r}]")
        ideals[nm] = sum(1 << lookup(x, f"ideals[{nm!r}]") for x in set(map(str, labs)))

    expansions = {}
    for nm, pairs in (doc.get("expansions") or {}).items():
        where = f"expansions[{nm!r}]"
        if nm in RESERVED_EXPANSIONS:
            raise InstanceFormatError("reserved expansion name", where)
        if not isinstance(pairs, list):
            raise InstanceFormatError("must be a list of [ideal, image] pairs", where)
        table = []
        for pair in pairs:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise InstanceFormatError("each entry must be [ideal labels, image labels]", where)
            src, dst = (sum(1 << lookup(x, where) for x in set(map(str, part))) for part in pair)
            table.append((src, dst))
        expansions[nm] = table
    return Instance(ring, ideals, expansions, source=name)


def loads(text: str, name: str = "") -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(exc.msg, f"line {exc.lineno} column {exc.colno}") from exc
    return parse(doc, name)


def load(path: str | Path) -> Instance:
    path = Path(path)
    return loads(path.read_text(), name=path.stem)


def to_document(
    ring: Hyperring,
    ideals: dict[str, int] | None = None,
    expansions: dict[str, list[tuple[int, int]]] | None = None,
) -> dict:
    labels = ring.labels
    doc: dict = {"m": ring.m, "n": ring.n, "carrier": list(labels), "zero": labels[ring.zero]}
    if ring.one is not None:
        doc["one"] = labels[ring.one]
    if ring.name:
        doc["name"] = ring.name
    doc["h"] = {_key(labels[i] for i in key): [labels[i] for i in members(v)] for key, v in sorted(ring.h_table().items())}
    doc["k"] = {_key(labels[i] for i in key): labels[v] for key, v in sorted(ring.k_table().items())}
    if ideals:
        doc["ideals"] = {nm: ring.labels_of(mask) for nm, mask in ideals.items()}
    if expansions:
        doc["expansions"] = {
            nm: [[ring.labels_of(a), ring.labels_of(b)] for a, b in table] for nm, table in expansions.items()
        }
    return doc


def dumps(ring: Hyperring, ideals=None, expansions=None) -> str:
    return json.dumps(to_document(ring, ideals, expansions), indent=1, ensure_ascii=False) + "\n"


def dump(ring: Hyperring, path: str | Path, ideals=None, expansions=None) -> None:
    Path(path).write_text(dumps(ring, ideals, expansions))
