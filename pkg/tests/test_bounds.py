"""Deletion bound, MDS-constructibility, density regimes, existence bounds."""

import pytest

from rookbound import (
    DensityClass,
    FerrersDiagram,
    HypothesisViolation,
    brute_force_census,
    check_equivalences,
    classify_density,
    diagonal_profile,
    enumerate_diagrams,
    existence_lower_bound,
    kappa,
    mc_density_exponent,
    mc_upper_bound,
    mds_constructible,
    parse_diagram,
    q_binomial_eval,
    transpose,
)
from conftest import all_diagrams, diagrams_up_to_size


def test_kappa_golden():
    assert kappa(parse_diagram("[2,3,3,3,4,5]"), 4).minimum == 3
    report = kappa(parse_diagram("[1,3,3,4,6,6]"), 4)
    assert report.minimum == 7
    assert 1 in report.argmin  # top row plus the two rightmost columns
    # for [1,3,3,4,5,5] the minimum is attained by deleting the three
    # topmost rows, leaving the 5 dots below row 3
    report = kappa(parse_diagram("[1,3,3,4,5,5]"), 4)
    assert report.minimum == 5
    assert report.values == (7, 7, 7, 5)
    assert report.argmin == (3,)


def test_kappa_d1_is_area():
    for f in (parse_diagram("[1,3,3,4,5,5]"), parse_diagram("[2,2]")):
        report = kappa(f, 1)
        assert report.values == (f.size,)
        assert report.minimum == f.size


def test_kappa_full_boards_singleton():
    for n in range(1, 7):
        for m in range(1, 7):
            board = FerrersDiagram((n,) * m)
            for d in range(1, min(n, m) + 1):
                expected = max(n, m) * (min(n, m) - d + 1)
                assert kappa(board, d).minimum == expected, (n, m, d)


def test_kappa_range_validation():
    with pytest.raises(HypothesisViolation):
        kappa(parse_diagram("[2,2]"), 3)
    with pytest.raises(HypothesisViolation):
        kappa(parse_diagram("[2,2]"), 0)


def test_kappa_showcase_rows():
    rows = [
        ("[2,3,4,4,4,5,6]", 5, 3),
        ("[2,2,2,2,3,4,5,6,7]", 3, 15),
        ("[2,3,4,4,5,5,5,5,5,7]", 6, 2),
        ("[1,3,4,6,6,6,6,7,8]", 7, 3),
        ("[4,6,6,6,7,7,7,8,9]", 8, 3),
    ]
    for text, d, expected in rows:
        assert kappa(parse_diagram(text), d).minimum == expected


def test_kappa_transpose_invariance():
    for f in all_diagrams(5, 5):
        for d in range(1, min(f.n, f.m) + 1):
            assert kappa(f, d).minimum == kappa(transpose(f), d).minimum


def test_mds_verdict_golden():
    assert mds_constructible(parse_diagram("[2,3,3,3,4,5]"), 4).is_mds_constructible
    verdict = mds_constructible(parse_diagram("[5,5,5,5,5,5]"), 4)
    assert not verdict.is_mds_constructible
    assert verdict.kappa == 12 and verdict.diagonal_sum_all == 6 and verdict.tau == 6
    assert mds_constructible(parse_diagram("[1,1,3,3]"), 2).is_mds_constructible
    assert not mds_constructible(parse_diagram("[1,1,3,3]"), 3).is_mds_constructible
    assert mds_constructible(parse_diagram("[1,1,3,3,5]"), 3).is_mds_constructible
    assert not mds_constructible(parse_diagram("[1,1,3,3,5]"), 4).is_mds_constructible


def test_mds_d1_always_constructible():
    for f in all_diagrams(4, 4):
        verdict = mds_constructible(f, 1)
        assert verdict.is_mds_constructible
        assert verdict.tau == f.size


def test_diagonal_sum_chain():
    # first-m sum <= all-diagonals sum <= kappa, on every board
    for f in all_diagrams(6, 6):
        for d in range(1, min(f.n, f.m) + 1):
            v = mds_constructible(f, d)
            assert v.diagonal_sum_first_m <= v.diagonal_sum_all <= v.kappa, (f, d)


def test_first_m_equality_iff_all_equality():
    for f in all_diagrams(5, 5):
        if f.m < f.n:
            continue
        for d in range(2, f.n + 1):
            v = mds_constructible(f, d)
            assert (v.kappa == v.diagonal_sum_first_m) == (
                v.kappa == v.diagonal_sum_all
            ), (f, d)


def test_check_equivalences_golden():
    rep = check_equivalences(parse_diagram("[1,1,3,3]"), 2)
    assert rep.first_m_equality and rep.all_diagonals_equality and rep.tau_equality
    rep = check_equivalences(parse_diagram("[1,1,3,3,5]"), 4)
    assert not rep.first_m_equality
    assert not rep.all_diagonals_equality
    assert rep.tau_equality is False
    with pytest.raises(HypothesisViolation):
        check_equivalences(parse_diagram("[1,1,3,3]"), 1)
    with pytest.raises(HypothesisViolation):
        check_equivalences(transpose(parse_diagram("[1,1,3,3]")), 2)


def test_check_equivalences_reports_kappa_zero():
    rep = check_equivalences(parse_diagram("[1,1,1,4]"), 4)
    assert not rep.tau_hypothesis_ok
    assert rep.tau_equality is None
    assert rep.kappa == 0


def test_check_equivalences_sweep():
    for f in all_diagrams(4, 4):
        if f.m < f.n:
            continue
        for d in range(2, f.n + 1):
            check_equivalences(f, d)  # raises on any disagreement


def test_square_chain_d2_implies_d3():
    for n in range(3, 6):
        for f in enumerate_diagrams(n, n):
            if mds_constructible(f, 2).is_mds_constructible:
                assert mds_constructible(f, 3).is_mds_constructible, f


def test_classify_band_diagrams():
    for m in range(2, 7):
        band = FerrersDiagram((2,) * m)
        assert classify_density(band, 2, m - 1) is DensityClass.DENSE
        assert classify_density(band, 2, m) is DensityClass.NOT_DENSE_AT_MOST_HALF
        if m + 1 <= band.size:
            assert classify_density(band, 2, m + 1) is DensityClass.SPARSE


def test_classify_golden():
    assert classify_density(parse_diagram("[5,5,5,5,5,5]"), 4, 12) is DensityClass.SPARSE
    assert classify_density(parse_diagram("[2,3,3,3,4,5]"), 4, 3) is DensityClass.DENSE


def test_classify_monotone_in_k():
    order = {
        DensityClass.DENSE: 0,
        DensityClass.NOT_DENSE_AT_MOST_HALF: 1,
        DensityClass.SPARSE: 2,
    }
    for f in (parse_diagram("[2,3,3,3,4,5]"), parse_diagram("[1,3,3,4,5,5]")):
        for d in range(2, min(f.n, f.m) + 1):
            if kappa(f, d).minimum < 1:
                continue
            ranks = [order[classify_density(f, d, k)] for k in range(1, f.size + 1)]
            assert ranks == sorted(ranks), (f, d)


def test_classify_validation():
    with pytest.raises(HypothesisViolation):
        classify_density(parse_diagram("[2,2]"), 1, 1)
    with pytest.raises(HypothesisViolation):
        classify_density(parse_diagram("[2,2]"), 2, 0)
    with pytest.raises(HypothesisViolation):
        classify_density(parse_diagram("[1,1,1,4]"), 4, 1)  # bound is zero


def test_existence_bound_golden():
    g = parse_diagram("[2,3,3,3,4,5]")
    assert existence_lower_bound(g, 4, 3, 3) == 345241120940998775695104
    assert existence_lower_bound(g, 4, 3, 2) == -6510288900541266


def test_existence_bound_validation():
    g = parse_diagram("[2,3,3,3,4,5]")
    with pytest.raises(HypothesisViolation):
        existence_lower_bound(g, 4, 4, 3)  # k above the bound
    with pytest.raises(ValueError):
        existence_lower_bound(g, 4, 3, 6)  # not a prime power


def test_existence_bound_k1_counts_exactly():
    # at d = 2, k = 1 the bound equals the number of projective points
    # of rank >= 2, which the census oracle can count directly
    for f in diagrams_up_to_size(7):
        if min(f.n, f.m) < 2:
            continue
        census = brute_force_census(f, 2)
        high_rank = sum(census.counts[2:])
        assert high_rank % 1 == 0
        expected = high_rank // (2 - 1)
        assert existence_lower_bound(f, 2, 1, 2) == expected, f


def test_mc_upper_bound_golden():
    # used diagonals of [2,3,3,3,4,5] at d=4 hold 4 and 5 dots, so the
    # bound is [4 choose 1]_4 * [5 choose 2]_4 = 85 * 5797
    assert mc_upper_bound(parse_diagram("[2,3,3,3,4,5]"), 4, 4) == 492745


def test_mc_upper_bound_single_diagonal():
    f = parse_diagram("[1,1,2]")
    for q in (2, 3, 5):
        assert mc_upper_bound(f, 2, q) == q_binomial_eval(2, 1, q)


def test_mc_upper_bound_rejects_non_constructible():
    with pytest.raises(HypothesisViolation):
        mc_upper_bound(parse_diagram("[5,5,5,5,5,5]"), 4, 4)


def test_mc_upper_bound_dominates_actual_code_choices():
    # over GF(q) the [2,1] codes with all-nonzero generator embed into
    # the single used diagonal of [1,1,2]; there are q-1 such generators
    # up to scaling, never more than the bound allows
    for q in (2, 3, 4):
        distinct = q - 1
        assert distinct <= mc_upper_bound(parse_diagram("[1,1,2]"), 2, q)


def test_mc_density_exponent():
    assert mc_density_exponent(parse_diagram("[2,3,3,3,4,5]"), 4) == 42
    for f in (parse_diagram("[1,2]"), parse_diagram("[2,2,2]")):
        assert mc_density_exponent(f, 1) == 0
    for m in range(2, 6):
        band = FerrersDiagram((2,) * m)
        assert mc_density_exponent(band, 2) == m * (m - 1)


def test_prop_diagonal_sum_bounds_kappa_after_transpose():
    # the all-diagonals sum is symmetric, so it bounds kappa in both
    # orientations
    for f in all_diagrams(5, 5):
        for d in range(1, min(f.n, f.m) + 1):
            s = diagonal_profile(f).surplus(d - 1)
            assert s <= kappa(f, d).minimum
            assert s <= kappa(transpose(f), d).minimum
