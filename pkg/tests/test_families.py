import random
from itertools import combinations

import pytest

from crossfam import (
    KSubset,
    Order,
    Params,
    SegmentSpec,
    SetFamily,
    UnsaturatedMatchingError,
    binom,
    brute_max_compatible_b_table,
    build_extremal_pair,
    build_lemma7_decomposition,
    build_prop1_graph,
    check_proof_inequalities,
    extremal_pair_sizes,
    family_complement,
    find_block_matching,
    hilton_compress,
    initial_segment,
    is_cross_intersecting,
    is_cross_union,
    lemma7_bound,
    max_compatible_b,
    prop1_sum_bound,
    pyber_bound,
    rank,
    segments_cross_intersecting,
    thm1_bound,
    thm2_bound,
)

from conftest import brute_cross_intersecting


def lex_segment(n, k, size):
    return initial_segment(SegmentSpec(Order.LEX, Params(n, k), size))


def star(n, k):
    return SetFamily.of(
        Params(n, k), (s for s in combinations(range(1, n + 1), k) if 1 in s)
    )


# ---------------------------------------------------------------------------
# predicates


def test_cross_intersecting_examples():
    assert is_cross_intersecting(star(6, 3), star(6, 3))
    a = SetFamily.of(Params(6, 2), [(1, 2)])
    b = SetFamily.of(Params(6, 2), [(3, 4)])
    assert not is_cross_intersecting(a, b)
    pair = build_extremal_pair(6, 3, 3)
    assert is_cross_intersecting(pair.a_family, pair.b_family)


def test_cross_intersecting_mixed_layers_and_errors():
    a = SetFamily.of(Params(6, 2), [(1, 2)])
    b3 = SetFamily.of(Params(6, 3), [(1, 3, 4), (2, 5, 6)])
    assert is_cross_intersecting(a, b3)
    with pytest.raises(ValueError):
        is_cross_intersecting(a, SetFamily.of(Params(7, 2), [(1, 2)]))
    assert is_cross_intersecting(SetFamily.empty(Params(6, 2)), b3)


def test_cross_union_examples():
    inner = SetFamily.of(
        Params(6, 3), combinations(range(1, 6), 3)
    )  # all 3-subsets of [5]: element 6 never covered
    assert is_cross_union(inner, inner)
    c = SetFamily.of(Params(6, 3), [(1, 2, 3)])
    d = SetFamily.of(Params(6, 3), [(4, 5, 6)])
    assert not is_cross_union(c, d)
    pair = build_extremal_pair(6, 3, 3)
    assert is_cross_union(
        family_complement(pair.a_family), family_complement(pair.b_family)
    )
    with pytest.raises(ValueError):
        is_cross_union(c, SetFamily.of(Params(7, 3), [(1, 2, 3)]))


def test_cross_predicates_complement_duality():
    rng = random.Random(7)
    for n in range(2, 9):
        k = n // 2
        layer = list(combinations(range(1, n + 1), k))
        for _ in range(40):
            a_sets = [s for s in layer if rng.random() < 0.4]
            b_sets = [s for s in layer if rng.random() < 0.4]
            a = SetFamily.of(Params(n, k), a_sets)
            b = SetFamily.of(Params(n, k), b_sets)
            assert is_cross_intersecting(a, b) == is_cross_union(
                family_complement(a), family_complement(b)
            )


# ---------------------------------------------------------------------------
# compression and the compatibility curve


def test_hilton_compress_examples():
    pair = build_extremal_pair(6, 3, 3)
    spec_a, spec_b = hilton_compress(pair.a_family, pair.b_family)
    assert (spec_a.size, spec_b.size) == (7, 13)
    seg_a, seg_b = initial_segment(spec_a), initial_segment(spec_b)
    assert is_cross_intersecting(seg_a, seg_b)
    # this extremal pair happens to be exactly its own compression
    assert seg_a == pair.a_family and seg_b == pair.b_family

    empty = SetFamily.empty(Params(6, 3))
    spec_e, spec_s = hilton_compress(empty, star(6, 3))
    assert (spec_e.size, spec_s.size) == (0, 10)

    s = star(6, 3)
    spec_1, spec_2 = hilton_compress(s, s)
    assert spec_1.size == spec_2.size == binom(5, 2)

    with pytest.raises(ValueError):
        hilton_compress(
            SetFamily.of(Params(6, 2), [(1, 2)]),
            SetFamily.of(Params(6, 2), [(3, 4)]),
        )


def test_max_compatible_b_examples():
    assert max_compatible_b(6, 3, 10) == 10
    assert max_compatible_b(6, 3, 7) == 13
    assert max_compatible_b(6, 3, 9) == 11
    assert max_compatible_b(6, 3, 0) == 20
    with pytest.raises(ValueError):
        max_compatible_b(6, 3, 21)
    with pytest.raises(ValueError):
        max_compatible_b(5, 3, 1)


def test_max_compatible_b_agrees_with_brute_force():
    # dual-route agreement on every layer of size at most 300
    for n in range(2, 25):
        for k in range(1, n // 2 + 1):
            if binom(n, k) > 300:
                continue
            brute = brute_max_compatible_b_table(n, k)
            for a_size, expected in enumerate(brute):
                assert max_compatible_b(n, k, a_size) == expected, (n, k, a_size)


def test_max_compatible_b_monotone_and_star_fixed_point():
    for n, k in [(6, 3), (7, 3), (8, 2), (9, 4), (10, 4)]:
        total = binom(n, k)
        prev = total
        for a_size in range(total + 1):
            cur = max_compatible_b(n, k, a_size)
            assert cur <= prev
            prev = cur
        if n > 2 * k:
            s = binom(n - 1, k - 1)
            assert max_compatible_b(n, k, s) == s


def test_compatibility_curve_symmetry():
    for n, k in [(5, 2), (6, 3), (7, 3), (8, 4)]:
        total = binom(n, k)
        for a_size in range(total + 1):
            for b_size in range(total + 1):
                forward = b_size <= max_compatible_b(n, k, a_size)
                backward = a_size <= max_compatible_b(n, k, b_size)
                assert forward == backward


def test_segments_cross_intersecting_matches_materialized_check():
    for n, k in [(5, 2), (6, 3)]:
        total = binom(n, k)
        for a_size in range(total + 1):
            seg_a = [s.elements for s in lex_segment(n, k, a_size)]
            for b_size in range(total + 1):
                seg_b = [s.elements for s in lex_segment(n, k, b_size)]
                assert segments_cross_intersecting(
                    n, k, a_size, b_size
                ) == brute_cross_intersecting(seg_a, seg_b)


# ---------------------------------------------------------------------------
# extremal pairs


def test_build_extremal_pair_examples():
    assert build_extremal_pair(6, 3, 3).sizes == (7, 13)
    assert build_extremal_pair(6, 3, 4).sizes == (9, 11)
    pair = build_extremal_pair(8, 3, 2)
    assert pair.sizes == (6, 36)
    # i = 2 pins every first-family member to contain {1, 2}
    assert all({1, 2} <= set(s.elements) for s in pair.a_family)
    with pytest.raises(ValueError):
        build_extremal_pair(6, 3, 1)
    with pytest.raises(ValueError):
        build_extremal_pair(6, 3, 5)
    with pytest.raises(ValueError):
        build_extremal_pair(5, 3, 3)
    assert build_extremal_pair(6, 3, 3).at_boundary
    assert not build_extremal_pair(7, 3, 3).at_boundary


def test_extremal_pairs_cross_intersecting_with_closed_form_sizes():
    for k in range(1, 6):
        for n in range(2 * k, 15):
            for i in range(2, k + 2):
                pair = build_extremal_pair(n, k, i)
                assert pair.sizes == extremal_pair_sizes(n, k, i)
                assert is_cross_intersecting(pair.a_family, pair.b_family)


def test_extremal_pairs_are_lex_segments():
    for k in range(2, 5):
        for n in range(2 * k, 13):
            for i in range(2, k + 2):
                pair = build_extremal_pair(n, k, i)
                for fam in (pair.a_family, pair.b_family):
                    ranks = {rank(s, Order.LEX) for s in fam}
                    assert ranks == set(range(len(fam)))


# ---------------------------------------------------------------------------
# bound evaluators


def test_pyber_bound_examples():
    assert pyber_bound(6, 3) == 100
    assert pyber_bound(4, 2) == 9
    assert pyber_bound(2, 1) == 1
    with pytest.raises(ValueError):
        pyber_bound(5, 3)


def test_thm1_bound_examples():
    assert thm1_bound(6, 3) == 99
    assert thm1_bound(5, 2) == (binom(4, 1) + 1) * (binom(4, 1) - binom(2, 1))
    assert thm1_bound(5, 2) == 10
    assert thm1_bound(7, 3) == 192
    with pytest.raises(ValueError):
        thm1_bound(5, 3)


def test_thm2_bound_examples():
    assert thm2_bound(6, 3, 3) == (13, 91)
    assert thm2_bound(6, 3, 4) == (11, 99)
    assert thm2_bound(8, 4, 3) == (45, 1125)
    with pytest.raises(ValueError):
        thm2_bound(6, 3, 2)
    with pytest.raises(ValueError):
        thm2_bound(6, 3, 5)


def test_thm2_at_top_parameter_equals_thm1():
    for k in range(2, 15):
        for n in range(2 * k + 1, 29):
            assert thm2_bound(n, k, k + 1).product_bound == thm1_bound(n, k)


def test_thm2_product_bound_nondecreasing_in_i():
    for k in range(2, 9):
        for n in range(2 * k, 21):
            values = [thm2_bound(n, k, i).product_bound for i in range(3, k + 2)]
            assert values == sorted(values), (n, k, values)


def test_prop1_sum_bound_examples():
    assert prop1_sum_bound(6, 3) == 20
    assert prop1_sum_bound(4, 2) == 6
    assert prop1_sum_bound(2, 1) == 2


def test_lemma7_bound_examples():
    assert lemma7_bound(4, 2, 1) == 6 == 2 * binom(3, 1)
    assert lemma7_bound(6, 3, 2) == 20
    assert lemma7_bound(6, 2, 2) == 10  # C(6,2) + C(4,0) - C(4,2)
    assert lemma7_bound(8, 3, 2) == 42
    with pytest.raises(ValueError):
        lemma7_bound(5, 3, 1)
    with pytest.raises(ValueError):
        lemma7_bound(6, 3, 0)


# ---------------------------------------------------------------------------
# graphs, decomposition, matching


def test_build_prop1_graph_examples():
    g = build_prop1_graph(6, 3)
    assert len(g.left) == len(g.right) == 6
    assert g.is_regular(1)

    g = build_prop1_graph(5, 2)
    assert len(g.left) == len(g.right) == 3
    assert g.is_regular(2)

    assert build_prop1_graph(4, 2).is_regular(1)


def test_build_prop1_graph_regular_across_range():
    for k in range(1, 5):
        for n in range(2 * k, 13):
            g = build_prop1_graph(n, k)
            assert len(g.left) == len(g.right) == binom(n - 2, k - 1)
            assert g.is_regular(binom(n - k - 1, k - 1)), (n, k)


def test_bipartite_graph_rejects_intersecting_edge():
    from crossfam import BipartiteGraph

    left = SetFamily.of(Params(4, 2), [(1, 3)])
    right = SetFamily.of(Params(4, 2), [(2, 3)])
    with pytest.raises(ValueError):
        BipartiteGraph(left, right, ((next(iter(left)), next(iter(right))),))


def test_lemma7_decomposition_sizes_and_partition():
    blocks = build_lemma7_decomposition(6, 2, 2)
    assert len(blocks) == 1
    p1, q1 = blocks[0]
    assert len(p1) == 4 and len(q1) == 4

    blocks = build_lemma7_decomposition(8, 3, 3)
    assert [len(p) for p, _ in blocks] == [binom(6, 2), binom(5, 1)] == [15, 5]
    assert [len(q) for _, q in blocks] == [binom(6, 2), binom(5, 2)] == [15, 10]

    # blocks partition the two reference families
    for m, a, j in [(6, 2, 2), (8, 3, 3), (8, 4, 4), (10, 4, 3)]:
        blocks = build_lemma7_decomposition(m, a, j)
        window = set(range(2, j + 1))
        a0 = {
            s
            for s in combinations(range(1, m + 1), a)
            if 1 in s and not window <= set(s)
        }
        b0 = {
            s
            for s in combinations(range(1, m + 1), a)
            if 1 not in s and window & set(s)
        }
        p_union, q_union = set(), set()
        p_total = q_total = 0
        for s, (p, q) in enumerate(blocks, start=1):
            assert len(p) == binom(m - s - 1, a - s)
            assert len(q) == binom(m - s - 1, a - 1)
            p_union.update(x.elements for x in p)
            q_union.update(x.elements for x in q)
            p_total += len(p)
            q_total += len(q)
        assert p_union == a0 and p_total == len(a0)
        assert q_union == b0 and q_total == len(b0)

    with pytest.raises(ValueError):
        build_lemma7_decomposition(6, 2, 1)
    with pytest.raises(ValueError):
        build_lemma7_decomposition(5, 3, 2)


def test_find_block_matching_examples():
    p1, q1 = build_lemma7_decomposition(6, 2, 2)[0]
    matching = find_block_matching(p1, q1)
    assert len(matching) == 4
    for u, v in matching:
        assert not u.mask & v.mask
    assert len({v for _, v in matching}) == 4

    empty = SetFamily.empty(Params(6, 2))
    assert find_block_matching(empty, q1) == []

    p2, q2 = build_lemma7_decomposition(8, 3, 3)[1]
    matching = find_block_matching(p2, q2)
    assert len(matching) == len(p2) == 5


def test_find_block_matching_error_paths():
    p = SetFamily.of(Params(4, 2), [(1, 2)])
    q = SetFamily.of(Params(4, 2), [(1, 3)])
    with pytest.raises(UnsaturatedMatchingError):
        find_block_matching(p, q)
    big = SetFamily.of(Params(4, 2), [(1, 2), (1, 3)])
    with pytest.raises(ValueError):
        find_block_matching(big, q)


# ---------------------------------------------------------------------------
# proof inequalities


def test_check_proof_inequalities_quoted_values():
    reports = {(r.bound_name, r.parameters.get("i"), r.parameters.get("x")): r
               for r in check_proof_inequalities(6, 3)}
    step = reports[("binom_step", 2, None)]
    assert step.parameters["lhs"] == 80 and step.parameters["rhs"] == 100
    ratio = reports[("ratio_step", None, 3)]
    assert ratio.parameters["lhs"] == 12 and ratio.parameters["rhs"] == 30

    reports42 = {
        (r.bound_name, r.parameters.get("i")): r
        for r in check_proof_inequalities(4, 2)
    }
    step = reports42[("binom_step", 2)]
    assert step.parameters["lhs"] == 6 and step.parameters["rhs"] == 9


def test_check_proof_inequalities_all_hold():
    for k in range(1, 11):
        for n in range(2 * k, 21):
            for report in check_proof_inequalities(n, k):
                assert report.passed, (n, k, report)
    with pytest.raises(ValueError):
        check_proof_inequalities(5, 3)
