"""Corpora of rings for sweeps: the shipped fixtures, or any instance files."""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .core import Hyperring
from .expansions import BUILTINS, Expansion, builtin, from_pairs
from .instance import Instance, load, loads


@dataclass
class CorpusEntry:
    """One ring with its named ideals and every expansion to sweep over."""

    id: str
    ring: Hyperring
    ideals: dict[str, int] = field(default_factory=dict)
    custom: dict[str, list[tuple[int, int]]] = field(default_factory=dict)
    _expansions: list[Expansion] | None = None

    @property
    def expansions(self) -> list[Expansion]:
        if self._expansions is None:
            out = [builtin(name, self.ring) for name in BUILTINS]
            out += [from_pairs(self.ring, name, pairs) for name, pairs in sorted(self.custom.items())]
            self._expansions = out
        return self._expansions

    @property
    def classifiable(self) -> bool:
        """Nonzero and with a scalar identity, so the predicates apply."""
        return self.ring.size > 1 and self.ring.one is not None


def entry_from_instance(inst: Instance, ident: str | None = None) -> CorpusEntry:
    inst.ring.require_valid()
    return CorpusEntry(ident or inst.source or inst.ring.name, inst.ring, dict(inst.ideals), dict(inst.expansions))


def fixture_names() -> list[str]:
    root = resources.files("krasner") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def load_fixture(name: str) -> Instance:
    text = (resources.files("krasner") / "fixtures" / f"{name}.json").read_text()
    return loads(text, name=name)


def shipped_corpus(names: Iterable[str] | None = None) -> list[CorpusEntry]:
    return [entry_from_instance(load_fixture(nm), nm) for nm in (names or fixture_names())]


def corpus_from_paths(paths: Iterable[str | Path]) -> list[CorpusEntry]:
    """Instance files, expanding directories to their *.json members in name order."""
    files: list[Path] = []
    for p in map(Path, paths):
        files.extend(sorted(p.glob("*.json")) if p.is_dir() else [p])
    return [entry_from_instance(load(f), f.stem) for f in files]
