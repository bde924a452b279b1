import json

import pytest

from krasner.corpus import corpus_from_paths, fixture_names, load_fixture, shipped_corpus
from krasner.errors import InstanceFormatError
from krasner.instance import dump, dumps, load, loads, to_document


@pytest.mark.parametrize("name", fixture_names())
def test_round_trip(name):
    inst = load_fixture(name)
    again = loads(dumps(inst.ring, inst.ideals, inst.expansions))
    assert again.ring.same_tables(inst.ring)
    assert again.ideals == inst.ideals
    assert again.expansions == inst.expansions
    assert dumps(again.ring, again.ideals, again.expansions) == dumps(inst.ring, inst.ideals, inst.expansions)


def _doc():
    return to_document(load_fixture("z2").ring)


def test_truncated_json_reports_position():
    with pytest.raises(InstanceFormatError) as exc:
        loads('{"m": 2, "n": 2,')
    assert "line 1" in str(exc.value)


@pytest.mark.parametrize("edit,where", [
    (lambda d: d.pop("h"), "h"),
    (lambda d: d.update(m=1), "m"),
    (lambda d: d.update(zero="7"), "zero"),
    (lambda d: d["h"].pop("1,1"), "h"),
    (lambda d: d["k"].update({"0,9": "0"}), "k['0,9']"),
    (lambda d: d.update(carrier=["0", "0"]), "carrier"),
    (lambda d: d.update(ideals={"Q": "0"}), "ideals['Q']"),
    (lambda d: d.update(expansions={"delta0": []}), "expansions['delta0']"),
])
def test_format_errors_name_the_field(edit, where):
    doc = _doc()
    edit(doc)
    with pytest.raises(InstanceFormatError) as exc:
        loads(json.dumps(doc))
    assert exc.value.where == where


def test_dump_and_directory_corpus(tmp_path):
    for name in ("z2", "z3"):
        inst = load_fixture(name)
        dump(inst.ring, tmp_path / f"{name}.json", inst.ideals)
    entries = corpus_from_paths([tmp_path])
    assert [e.id for e in entries] == ["z2", "z3"]
    assert load(tmp_path / "z2.json").ring.same_tables(load_fixture("z2").ring)
    empty = tmp_path / "empty"
    empty.mkdir()
    assert corpus_from_paths([empty]) == []


def test_shipped_corpus():
    corpus = shipped_corpus()
    assert len(corpus) == len(fixture_names()) >= 6
    assert sum(e.classifiable for e in corpus) == len(corpus) - 1
    z8 = next(e for e in corpus if e.id == "z8")
    assert [d.name for d in z8.expansions] == ["delta0", "delta1", "deltaR", "radical_except_zero"]
