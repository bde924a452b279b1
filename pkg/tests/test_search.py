from krasner.search import KINDS, GeneratorConfig, archive_violations, counterexample_search, generate


def test_budget_zero_is_empty():
    result = counterexample_search(0)
    assert (result.generated, result.valid, result.distinct) == (0, 0, 0)
    assert result.report.ok and not result.report.stats


def test_stream_is_reproducible():
    cfg = GeneratorConfig(seed=7)
    a = [(i, kind, ring and sorted(ring.h_table().items())) for i, kind, ring in generate(cfg, 40)]
    b = [(i, kind, ring and sorted(ring.h_table().items())) for i, kind, ring in generate(GeneratorConfig(seed=7), 40)]
    assert a == b
    assert {kind for _, kind, _ in a} <= set(KINDS)


def test_small_search_is_clean_and_deterministic():
    a = counterexample_search(120, GeneratorConfig(seed=3))
    b = counterexample_search(120, GeneratorConfig(seed=3))
    assert a.to_json() == b.to_json()
    assert a.generated == 120
    assert 0 < a.distinct <= a.valid <= a.generated
    assert a.report.ok, a.report.to_text()
    violated = {tid for tid, st in a.report.stats.items() if st.violations}
    assert all(tid.startswith("LIT-") for tid in violated)
    lit_rings = {r["ring"] for t in a.report.to_dict()["theorems"] for r in t["violation_records"]}
    assert set(archive_violations(a)) <= lit_rings


def test_candidates_respect_size_bound():
    cfg = GeneratorConfig(seed=1, max_size=4)
    for _, _, ring in generate(cfg, 60):
        if ring is not None:
            assert ring.size <= 4
