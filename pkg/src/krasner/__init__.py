"""Finite Krasner (m,n)-hyperrings and absorbing semiprimary hyperideals."""

from .builders import krasner_quotient, zero_ring, zmod, zmod_quotient
from .classify import (
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
)
from .constructions import build_product, build_quotient
from .core import AxiomReport, Hyperring
from .corpus import CorpusEntry, corpus_from_paths, fixture_names, load_fixture, shipped_corpus
from .errors import KrasnerError
from .expansions import Expansion, builtin, from_pairs
from .ideals import Hyperideal, enumerate_hyperideals, hyperideal, ideal_product, is_prime, radical
from .instance import dump, dumps, load, loads
from .reports import ClassificationReport
from .search import counterexample_search
from .theorems import HarnessConfig, TheoremReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "AbsorbingParams",
    "AxiomReport",
    "ClassificationReport",
    "CorpusEntry",
    "Expansion",
    "HarnessConfig",
    "Hyperideal",
    "Hyperring",
    "KrasnerError",
    "TheoremReport",
    "build_product",
    "build_quotient",
    "builtin",
    "classify_all",
    "corpus_from_paths",
    "counterexample_search",
    "dump",
    "dumps",
    "enumerate_hyperideals",
    "find_delta_tn_zeros",
    "fixture_names",
    "from_pairs",
    "hyperideal",
    "ideal_product",
    "is_delta_primary",
    "is_delta_tn_zero",
    "is_free_delta_tn_zero",
    "is_prime",
    "is_strongly_variant",
    "is_tn_absorbing",
    "is_tn_absorbing_delta_primary",
    "is_tn_absorbing_delta_semiprimary",
    "is_weakly_tn_absorbing_delta_semiprimary",
    "krasner_quotient",
    "load",
    "load_fixture",
    "loads",
    "radical",
    "run_suite",
    "shipped_corpus",
    "zero_ring",
    "zmod",
    "zmod_quotient",
]
