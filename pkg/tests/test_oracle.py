import pytest

from crossfam import (
    SweepConfig,
    binom,
    brute_max_compatible_b_table,
    sweep_pyber,
    sweep_thm1,
    sweep_thm2,
    thm1_bound,
    verify_hilton_exhaustive,
    verify_kk,
    verify_kk_and_mors,
    verify_lemma7,
    verify_mors,
    verify_prop1,
)
from crossfam.oracle import (
    ensure_exhaustive_allowed,
    ensure_segment_pairs_allowed,
    exhaustive_allowed,
    exhaustive_family_cap,
    make_verdict,
)


def one(verdicts):
    assert len(verdicts) == 1
    return verdicts[0]


def test_make_verdict_relations():
    assert make_verdict("x", {}, "==", 5, 5).passed
    assert not make_verdict("x", {}, "==", 5, 4).passed
    assert make_verdict("x", {}, "<=", 5, 4).passed
    assert make_verdict("x", {}, ">=", 5, 6).passed
    assert not make_verdict("x", {}, "==", 5, 5, extra_ok=False).passed


def test_sweep_config_validation():
    with pytest.raises(ValueError):
        SweepConfig.grid([6], [3], mode="everything")
    with pytest.raises(ValueError):
        SweepConfig.grid([6], [3], sample_count=0)


def test_segment_pair_cap_enforced():
    with pytest.raises(ValueError):
        sweep_pyber(SweepConfig.grid([30], [10]))


def test_exhaustive_cap_env_override(monkeypatch):
    assert exhaustive_allowed(5, 2)  # 2^10 within the default cap
    monkeypatch.setenv("CROSSFAM_MAX_EXHAUSTIVE", "1024")
    assert exhaustive_family_cap() == 1024
    assert exhaustive_allowed(5, 2)  # 2^10 == 1024 still allowed
    monkeypatch.setenv("CROSSFAM_MAX_EXHAUSTIVE", "512")
    assert not exhaustive_allowed(5, 2)
    with pytest.raises(ValueError):
        ensure_exhaustive_allowed(5, 2)
    verdict = verify_hilton_exhaustive(5, 2, sample_count=500, seed=3)
    assert verdict.parameters["mode"] == "sampled" and verdict.seed == 3
    monkeypatch.setenv("CROSSFAM_MAX_EXHAUSTIVE", "-2")
    with pytest.raises(ValueError):
        exhaustive_family_cap()


def test_sweep_pyber_examples():
    v = one(sweep_pyber(SweepConfig.grid([6], [3])))
    assert v.passed and v.observed == 100
    assert (10, 10) in v.attained_at

    v = one(sweep_pyber(SweepConfig.grid([4], [2])))
    assert v.passed and v.observed == 9
    assert (3, 3) in v.attained_at

    v = one(sweep_pyber(SweepConfig.grid([2], [1])))
    assert v.passed and v.observed == 1


def test_sweep_thm2_examples():
    v = one(sweep_thm2(SweepConfig.grid([6], [3], i_values=(3,))))
    assert v.passed and v.observed == 91 and (7, 13) in v.attained_at

    v = one(sweep_thm2(SweepConfig.grid([6], [3], i_values=(4,))))
    assert v.passed and v.observed == 99 and (9, 11) in v.attained_at

    v = one(sweep_thm2(SweepConfig.grid([8], [4], i_values=(5,))))
    assert v.passed and v.expected == thm1_bound(8, 4) == 1224


def test_sweep_thm2_skips_invalid_points():
    assert sweep_thm2(SweepConfig.grid([5], [3])) == []
    assert sweep_thm2(SweepConfig.grid([6], [3], i_values=(2, 9))) == []


def test_sweep_thm1_examples():
    verdicts = sweep_thm1(SweepConfig.grid([5], [2]))
    assert all(v.passed for v in verdicts)
    segments = [v for v in verdicts if v.parameters["branch"] == "segments"]
    assert one(segments).expected == 10

    boundary = [v for v in verdicts if v.parameters["branch"] == "empty_intersection"]
    b = one(boundary)
    assert b.observed == 2 and b.expected == 2 and b.parameters["families_checked"] == 205

    verdicts = sweep_thm1(SweepConfig.grid([6], [3]))
    seg = one([v for v in verdicts if v.parameters["branch"] == "segments"])
    assert seg.passed and seg.observed == 99 and (9, 11) in seg.attained_at
    assert seg.parameters["boundary"]

    verdicts = sweep_thm1(SweepConfig.grid([7], [3]))
    seg = one([v for v in verdicts if v.parameters["branch"] == "segments"])
    assert seg.passed and seg.expected == 192


def test_verify_hilton_exhaustive_small():
    for n, k in [(4, 2), (5, 2)]:
        v = verify_hilton_exhaustive(n, k)
        assert v.passed and v.observed == 0
        assert v.parameters["mode"] == "exhaustive"


def test_verify_hilton_sampled_deterministic():
    a = verify_hilton_exhaustive(6, 3, sample_count=2_000, seed=11, mode="sampled")
    b = verify_hilton_exhaustive(6, 3, sample_count=2_000, seed=11, mode="sampled")
    assert a == b
    assert a.passed and a.parameters["mode"] == "sampled" and a.seed == 11
    with pytest.raises(ValueError):
        verify_hilton_exhaustive(6, 3, mode="guess")
    with pytest.raises(ValueError):
        verify_hilton_exhaustive(7, 3, mode="exhaustive_families")


def test_verify_prop1_examples():
    v = verify_prop1(6, 3)
    assert v.passed and v.observed == 20 and v.expected == 20
    star = binom(5, 2)
    assert (star, star) in v.attained_at
    assert v.parameters["regular"] and v.parameters["neighborhood"]

    v = verify_prop1(5, 2)
    assert v.passed and v.observed == 8
    assert (4, 4) in v.attained_at

    with pytest.raises(ValueError):
        verify_prop1(5, 3)


def test_verify_lemma7_examples():
    v = verify_lemma7(6, 2, 2)
    assert v.passed and v.observed == v.expected == 10
    assert (1, 9) in v.attained_at

    v = verify_lemma7(4, 2, 1)
    assert v.passed and v.observed == 6
    assert v.attained_at == ((3, 3),)  # both sizes forced

    v = verify_lemma7(8, 3, 2)
    assert v.passed and v.expected == 42
    assert v.parameters["blocks"] >= 1 and v.parameters["matchings_saturating"]

    with pytest.raises(ValueError):
        verify_lemma7(5, 3, 1)
    with pytest.raises(ValueError):
        verify_lemma7(8, 3, 4)


def test_verify_kk_exhaustive_and_sampled():
    v = verify_kk(5, 3, 2)
    assert v.passed and v.observed == 0
    assert v.parameters["families"] == 1024

    v = verify_kk(6, 3, 2, mode="sampled", sample_count=5_000, seed=5)
    assert v.passed and v.observed == 0 and v.seed == 5
    again = verify_kk(6, 3, 2, mode="sampled", sample_count=5_000, seed=5)
    assert v == again

    with pytest.raises(ValueError):
        verify_kk(6, 3, 2, mode="fishing")
    with pytest.raises(ValueError):
        verify_kk(7, 3, 2)  # 2^35 families is beyond exhaustive reach


def test_verify_mors_example():
    v = verify_mors(5, 3, 2)
    assert v.passed and v.observed == 8 and v.expected == 8
    assert v.parameters["min_attains_bound"]
    assert v.parameters["families_with_full_union"] == 205
    with pytest.raises(ValueError):
        verify_mors(9, 4, 2)  # enumeration too large


def test_verify_kk_and_mors_bundle():
    verdicts = verify_kk_and_mors(SweepConfig.grid([], [], sample_count=2_000, seed=1))
    assert len(verdicts) == 3
    assert all(v.passed for v in verdicts)


def test_brute_table_spot_values():
    table = brute_max_compatible_b_table(6, 3)
    assert table[10] == 10 and table[7] == 13 and table[9] == 11
    assert table[0] == 20 and table[20] == 0


def test_sweeps_deterministic():
    cfg = SweepConfig.grid([6, 8], [2, 3])
    assert sweep_pyber(cfg) == sweep_pyber(cfg)
    assert sweep_thm2(cfg) == sweep_thm2(cfg)
