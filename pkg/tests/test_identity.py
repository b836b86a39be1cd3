from fractions import Fraction as F
from itertools import permutations

import pytest

from hankel_moments import sampling
from hankel_moments.exact_core import RatMatrix, UniPoly, det_fraction_free, poly_taylor_coeff
from hankel_moments.identity import (
    LinearCombination,
    PointConfiguration,
    RepeatedPointError,
    gram_form,
    lambda_from_points,
    lemma3_check,
    lhs_hankel,
    padded_jacobi_check,
    rhs_confluent,
    rhs_distinct,
    shift_expansion,
    verify_theorem1,
)
from hankel_moments.orthopoly import (
    MomentSequence,
    RecurrenceCoeffs,
    build_family,
    hankel_base_det,
    moments_from_coeffs,
)

MOTZKIN = RecurrenceCoeffs((), 1, (), 1)


def test_configuration_groups_repeats():
    cfg = PointConfiguration.from_list([2, F(1, 2), 2, 2])
    assert cfg.points == ((F(2), 3), (F(1, 2), 1))
    assert (cfg.d, cfg.e, cfg.is_distinct) == (4, 2, False)
    with pytest.raises(ValueError):
        PointConfiguration(((1, 1), (1, 2)))


def test_lambda_from_points():
    assert lambda_from_points(PointConfiguration.from_list([5])).lam == (5, 1)
    a, b = F(2, 3), F(-7)
    assert lambda_from_points(PointConfiguration.from_list([a, b])).lam == (a * b, a + b, 1)
    assert lambda_from_points(PointConfiguration(())).lam == (1,)


def test_linear_combination_must_be_monic():
    with pytest.raises(ValueError):
        LinearCombination((1, 2))
    assert LinearCombination((3, 1)).q == UniPoly([3, 1])


def test_lhs_hankel_small_cases():
    m = moments_from_coeffs(MOTZKIN, 10)
    a = F(3, 4)
    assert lhs_hankel(m, LinearCombination((a, 1)), 1) == a + 1
    assert lhs_hankel(m, LinearCombination((9, 1)), 0) == 1
    c = RecurrenceCoeffs((1,), 2, (3,), F(1, 2))
    mc = moments_from_coeffs(c, 12)
    for n in range(6):
        assert lhs_hankel(mc, LinearCombination((1,)), n) == hankel_base_det(c, n)


def test_rhs_distinct_small_cases():
    c = RecurrenceCoeffs((F(1, 3),), 2, (5,), -1)
    fam = build_family(c, "p", 6)
    assert rhs_distinct(fam, PointConfiguration(()), 3) == 1
    assert rhs_distinct(fam, PointConfiguration.from_list([F(2, 5)]), 4) == fam[4](F(-2, 5))
    with pytest.raises(RepeatedPointError):
        rhs_distinct(fam, PointConfiguration.from_list([1, 1]), 2)


def test_rhs_distinct_symmetric_in_points(rng):
    c = sampling.recurrence_coeffs(rng)
    fam = build_family(c, "p", 8)
    pts = sampling.distinct_rationals(rng, 3)
    values = {rhs_distinct(fam, PointConfiguration.from_list(list(p)), 4)
              for p in permutations(pts)}
    assert len(values) == 1


def test_confluent_agrees_with_distinct(rng):
    for _ in range(20):
        c = sampling.recurrence_coeffs(rng)
        fam = build_family(c, "p", 9)
        cfg = PointConfiguration.from_list(sampling.distinct_rationals(rng, rng.randint(0, 3)))
        n = rng.randint(0, 6)
        assert rhs_confluent(fam, cfg, n) == rhs_distinct(fam, cfg, n)


def test_confluent_double_point_block():
    c = RecurrenceCoeffs((2,), -1, (3,), 4)
    fam = build_family(c, "p", 6)
    y, n = F(3, 2), 3
    expected = det_fraction_free([
        [fam[n](-y), fam[n].derivative()(-y)],
        [fam[n + 1](-y), fam[n + 1].derivative()(-y)]])
    assert rhs_confluent(fam, PointConfiguration(((y, 2),)), n) == expected


def test_confluent_all_at_zero():
    fam = build_family(MOTZKIN, "p", 9)
    d, n = 3, 4
    expected = det_fraction_free(RatMatrix.from_function(
        d, d, lambda i, j: poly_taylor_coeff(fam[n + i], j, 0)))
    assert rhs_confluent(fam, PointConfiguration(((0, d),)), n) == expected


@pytest.mark.parametrize("n", range(5))
def test_confluent_is_limit_of_distinct(n):
    # points y and y + h with h formal: the ratio is a polynomial in h
    c = RecurrenceCoeffs((F(1, 2),), 3, (2,), F(-1, 3))
    fam = build_family(c, "p", n + 1)
    y = F(5, 7)
    h = UniPoly([0, 1], var="h")
    neg_shifted = UniPoly([-y, -1], var="h")  # -(y + h)
    mat = RatMatrix.from_rows([
        [UniPoly([fam[n + i](-y)], var="h"), fam[n + i].compose(neg_shifted)]
        for i in range(2)])
    numerator = det_fraction_free(mat)
    # prod_{i<j}(x_i - x_j) = y - (y + h) = -h
    ratio = numerator.exquo(-h)
    assert ratio(0) == rhs_confluent(fam, PointConfiguration(((y, 2),)), n)


def test_verify_theorem1_random_distinct(rng):
    for _ in range(60):
        c = sampling.recurrence_coeffs(rng)
        cfg = PointConfiguration.from_list(sampling.distinct_rationals(rng, rng.randint(0, 3)))
        rep = verify_theorem1(c, cfg, rng.randint(0, 6))
        assert rep.equal
        assert all(ok for _, ok in rep.checks)


def test_verify_theorem1_confluent(rng):
    for _ in range(40):
        c = sampling.recurrence_coeffs(rng)
        y = sampling.rational(rng)
        rest = [v for v in sampling.distinct_rationals(rng, 2) if v != y]
        pts = [y] * rng.randint(2, 3)
        pts += rest[:3 - len(pts)]
        rep = verify_theorem1(c, PointConfiguration.from_list(pts), rng.randint(0, 5))
        assert rep.equal


def test_verify_theorem1_empty_configuration():
    c = RecurrenceCoeffs((1,), 2, (3,), 5)
    rep = verify_theorem1(c, PointConfiguration(()), 4)
    assert rep.equal and rep.lhs == rep.base_det and rep.rhs_ratio == 1


def test_report_json_shape():
    rep = verify_theorem1(MOTZKIN, PointConfiguration.from_list([1, 2]), 3)
    doc = rep.to_json()
    for key in ("n", "d", "lhs", "rhs_ratio", "base_det", "sign", "equal"):
        assert key in doc
    assert doc["sign"] in (1, -1) and doc["equal"] is True
    assert F(doc["lhs"]) == doc["sign"] * F(doc["base_det"]) * F(doc["rhs_ratio"])


def test_corrupted_moments_are_detected():
    vals = list(moments_from_coeffs(MOTZKIN, 12).values)
    vals[7] += 1
    bad = MomentSequence(tuple(vals))
    cfg = PointConfiguration.from_list([1, 2])
    results = [verify_theorem1(MOTZKIN, cfg, n, bad).equal for n in range(6)]
    # mu_7 first enters at n = 4 (largest index 2n - 2 + d)
    assert results == [True, True, True, True, False, False]


def test_gram_form(rng):
    c = RecurrenceCoeffs((2,), 1, (F(1, 2),), 3)
    m = moments_from_coeffs(c, 12)
    fam = build_family(c, "p", 4)
    lc = LinearCombination((F(1, 3), -2, 1))
    assert gram_form(m, lc, fam, 1) == lc.lam[0] * m[0] + lc.lam[1] * m[1] + m[2]
    assert gram_form(m, LinearCombination((1,)), fam, 4) == hankel_base_det(c, 4)
    for _ in range(30):
        c = sampling.recurrence_coeffs(rng)
        d = rng.randint(0, 3)
        lc = LinearCombination(tuple(sampling.rational(rng) for _ in range(d)) + (1,))
        n = rng.randint(0, 4)
        m = moments_from_coeffs(c, 2 * n + d + 1)
        fam = build_family(c, "p", max(n - 1, 0))
        assert gram_form(m, lc, fam, n) == lhs_hankel(m, lc, n)


def test_lemma3(rng):
    seq = [sampling.rational(rng) for _ in range(10)]
    assert lemma3_check(seq, 2, 2, 3)
    assert lemma3_check([1, 2, 3, 5], F(1, 2), -3, 1)
    for _ in range(30):
        n = rng.randint(0, 4)
        seq = [sampling.rational(rng) for _ in range(2 * n + 2)]
        assert lemma3_check(seq, sampling.rational(rng), sampling.rational(rng), n)
    with pytest.raises(ValueError):
        lemma3_check([1, 2, 3], 1, 2, 1)


def test_shift_expansion(rng):
    lhs, rhs = shift_expansion([3, 5], 7, 0)
    assert lhs == rhs == 7 * 3 + 5
    seq = [sampling.rational(rng) for _ in range(8)]
    lhs, rhs = shift_expansion(seq, 0, 3)
    shifted = det_fraction_free(RatMatrix.from_function(4, 4, lambda i, j: seq[i + j + 1]))
    assert lhs == rhs == shifted
    for _ in range(30):
        M = rng.randint(0, 3)
        seq = [sampling.rational(rng) for _ in range(2 * M + 2)]
        lhs, rhs = shift_expansion(seq, sampling.rational(rng), M)
        assert lhs == rhs


def test_padded_jacobi(rng):
    for _ in range(20):
        n = rng.randint(1, 4)
        seq = [sampling.rational(rng) for _ in range(2 * n + 2)]
        s = rng.randint(0, n)
        t = rng.randint(s, n)
        assert padded_jacobi_check(seq, n, s, t)
