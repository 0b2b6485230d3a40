"""Decomposition search: pool, minimal witnesses, scans, verification."""

import itertools

import pytest

from platonics import (
    PlatonicKind,
    PoolEntry,
    Witness,
    min_term_decomposition,
    platonic_pool,
    scan_conjecture,
    verify_witness,
    witness_from_values,
)
from known_sums import REFERENCE_SUMS


def brute_force_min_terms(limit, max_terms):
    """Independent oracle: enumerate multisets of pool values outright."""
    values = [entry.value for entry in platonic_pool(limit)]
    best = {}
    for k in range(1, max_terms + 1):
        for combo in itertools.combinations_with_replacement(values, k):
            total = sum(combo)
            if total <= limit and total not in best:
                best[total] = k
    return best


def brute_force_min_terms_distinct(limit, max_terms):
    values = [entry.value for entry in platonic_pool(limit)]
    best = {}
    for k in range(1, max_terms + 1):
        for combo in itertools.combinations(values, k):
            total = sum(combo)
            if total <= limit and total not in best:
                best[total] = k
    return best


def test_pool_small_limits():
    assert [e.value for e in platonic_pool(10)] == [1, 4, 6, 8, 10]
    only_one = platonic_pool(1)
    assert len(only_one) == 1
    assert only_one[0].value == 1
    assert len(only_one[0].provenance) == 5
    assert [kind for kind, _ in only_one[0].provenance] == list(PlatonicKind)


def test_pool_provenance_merging():
    pool = platonic_pool(20)
    assert [e.value for e in pool] == [1, 4, 6, 8, 10, 12, 19, 20]
    twenty = pool[-1]
    assert twenty.provenance == (
        (PlatonicKind.TETRAHEDRAL, 4),
        (PlatonicKind.DODECAHEDRAL, 2),
    )


def test_pool_validation():
    with pytest.raises(ValueError):
        platonic_pool(0)


def test_min_term_trivial():
    witness = min_term_decomposition(1, platonic_pool(1))
    assert witness.term_values == (1,)
    assert verify_witness(witness)


def test_min_term_104_is_two_terms():
    witness = min_term_decomposition(104, platonic_pool(120))
    assert witness.term_values == (85, 19)
    assert verify_witness(witness, max_terms=5)


def test_min_term_119_is_two_terms():
    witness = min_term_decomposition(119, platonic_pool(120))
    assert witness.term_values == (84, 35)
    assert sum(witness.term_values) == 119


def test_min_term_absent_is_none():
    pool = platonic_pool(20)
    assert min_term_decomposition(2, pool, max_terms=1) is None
    assert min_term_decomposition(17, pool, max_terms=2) is None
    assert min_term_decomposition(17, pool, max_terms=3) is not None


def test_min_term_validation():
    pool = platonic_pool(10)
    with pytest.raises(ValueError):
        min_term_decomposition(0, pool)
    with pytest.raises(ValueError):
        min_term_decomposition(5, pool, max_terms=0)


def test_min_terms_match_brute_force():
    limit = 300
    oracle = brute_force_min_terms(limit, 5)
    pool = platonic_pool(limit)
    for m in range(1, limit + 1):
        witness = min_term_decomposition(m, pool)
        observed = len(witness.terms) if witness else None
        assert observed == oracle.get(m), f"min terms disagree at {m}"
        if witness:
            assert verify_witness(witness)


def test_verify_witness_examples():
    pool = platonic_pool(120)
    assert verify_witness(witness_from_values(93, (85, 8), pool))
    five_terms = witness_from_values(100, (85, 12, 1, 1, 1), pool)
    assert len(five_terms.terms) == 5
    assert verify_witness(five_terms)


def test_verify_witness_rejects_forged_value():
    forged = Witness(
        target=93,
        terms=(
            PoolEntry(value=85, provenance=((PlatonicKind.OCTAHEDRAL, 5),)),
            PoolEntry(value=9, provenance=((PlatonicKind.CUBE, 2),)),
        ),
    )
    assert not verify_witness(forged)


def test_verify_witness_rejects_bad_counts_and_sums():
    pool = platonic_pool(10)
    witness = witness_from_values(5, (4, 1), pool)
    assert verify_witness(witness)
    assert not verify_witness(witness, max_terms=1)
    assert not verify_witness(witness_from_values(6, (4, 1), pool))


def test_witness_from_values_rejects_non_platonic():
    with pytest.raises(ValueError):
        witness_from_values(93, (85, 9), platonic_pool(120))


def test_reference_sums_all_verify():
    pool = platonic_pool(120)
    assert len(REFERENCE_SUMS) == 34
    for target, terms in REFERENCE_SUMS:
        witness = witness_from_values(target, terms, pool)
        assert verify_witness(witness, max_terms=5), f"reference row {target}"


def test_scan_small():
    report = scan_conjecture(120)
    assert report.failures == ()
    assert sum(report.histogram.values()) == 120
    assert report.histogram[1] == 17  # pool values up to 120


def test_scan_trivial():
    report = scan_conjecture(1, max_terms=1)
    assert report.histogram == {1: 1}
    assert report.failures == ()


def test_scan_histogram_plus_failures_covers_everything():
    for budget in (1, 2, 5):
        report = scan_conjecture(60, max_terms=budget)
        assert sum(report.histogram.values()) + len(report.failures) == 60


def test_scan_budget_one_failures():
    report = scan_conjecture(10, max_terms=1)
    assert report.failures == (2, 3, 5, 7, 9)


def test_scan_witnesses_kept():
    report = scan_conjecture(50, keep_witnesses=True)
    assert report.witnesses is not None
    assert len(report.witnesses) == 50 - len(report.failures)
    for witness in report.witnesses:
        assert verify_witness(witness, max_terms=5)


def test_scan_determinism_and_worker_independence():
    one = scan_conjecture(2000, workers=1)
    again = scan_conjecture(2000, workers=1)
    four = scan_conjecture(2000, workers=4)
    assert one == again == four


def test_scan_validation_and_ceiling():
    with pytest.raises(ValueError):
        scan_conjecture(0)
    with pytest.raises(ValueError):
        scan_conjecture(100, max_terms=0)
    with pytest.raises(ValueError):
        scan_conjecture(100, workers=0)
    with pytest.raises(ValueError):
        scan_conjecture(10_000, ceiling=100)


def test_four_term_integers_exist():
    # smallest integer needing four terms; no three pool values reach it
    target = 26015
    pool = platonic_pool(target)
    witness = min_term_decomposition(target, pool)
    assert len(witness.terms) == 4
    assert verify_witness(witness)
    values = [e.value for e in pool]
    pair_sums = {a + b for a, b in itertools.combinations_with_replacement(values, 2)}
    assert all(target - v not in pair_sums for v in values)
    assert target not in pair_sums and target not in values


def test_strict_distinct_counterexamples():
    report = scan_conjecture(30, strict_distinct=True)
    assert report.failures == (2, 3)  # 1+1 and 1+1+1 are barred
    assert report.strict_distinct


def test_strict_distinct_witnesses_have_distinct_values():
    pool = platonic_pool(200)
    for m in (87, 88, 92, 100, 115):
        witness = min_term_decomposition(m, pool, strict_distinct=True)
        assert witness is not None
        assert len(set(witness.term_values)) == len(witness.term_values)
        assert sum(witness.term_values) == m


def test_strict_distinct_matches_brute_force():
    limit = 150
    oracle = brute_force_min_terms_distinct(limit, 5)
    pool = platonic_pool(limit)
    for m in range(1, limit + 1):
        witness = min_term_decomposition(m, pool, strict_distinct=True)
        observed = len(witness.terms) if witness else None
        assert observed == oracle.get(m), f"strict min terms disagree at {m}"


def test_strict_never_beats_default():
    pool = platonic_pool(100)
    for m in range(1, 101):
        default = min_term_decomposition(m, pool)
        strict = min_term_decomposition(m, pool, strict_distinct=True)
        if strict is not None:
            assert default is not None
            assert len(default.terms) <= len(strict.terms)
