from fractions import Fraction as F

import pytest

from hankel_moments import sampling
from hankel_moments.exact_core import UniPoly
from hankel_moments.identity import LinearCombination, PointConfiguration, lambda_from_points
from hankel_moments.orthopoly import RecurrenceCoeffs
from hankel_moments.recurrence import (
    InsufficientTermsError,
    RecurrenceSpec,
    c1_value,
    charpoly_tensor,
    fit_recurrence,
    minimal_recurrence,
    recurrence_poly,
    scaled_hankel_seq,
    symmetry_check,
    synthesize_recurrence,
    verify_recurrence,
    window_rule,
)
from hankel_moments.sequences import get_sequence, shifted_hankel_direct

CATALAN = get_sequence("catalan").coeffs
MOTZKIN = get_sequence("motzkin").coeffs


def _random_lc(rng, d):
    return LinearCombination(tuple(sampling.rational(rng) for _ in range(d)) + (1,))


def test_spec_validation_and_json():
    spec = RecurrenceSpec(2, (1, -5, 1), 2, "remark2a")
    doc = spec.to_json()
    assert doc == {"order": 2, "c": ["1", "-5", "1"], "validity_start": 2,
                   "window_rule": "remark2a"}
    assert RecurrenceSpec.from_json(doc) == spec
    with pytest.raises(ValueError):
        RecurrenceSpec(2, (1, 2), 3)
    with pytest.raises(ValueError):
        RecurrenceSpec(1, (2, 1), 3)


def test_scaled_sequence_trivial_combination():
    for c in (CATALAN, MOTZKIN, RecurrenceCoeffs((5,), 2, (3,), F(1, 2))):
        seq = scaled_hankel_seq(c, LinearCombination((1,)), 10)
        assert seq.values == (1,) * 10


def test_scaled_sequence_motzkin_is_unscaled():
    lc = LinearCombination((0, 1))
    seq = scaled_hankel_seq(MOTZKIN, lc, 8)
    motzkin = get_sequence("motzkin")
    assert list(seq.values[1:]) == [shifted_hankel_direct(motzkin, n, 1) for n in range(1, 8)]


def test_catalan_lambda_one_one():
    seq = scaled_hankel_seq(CATALAN, LinearCombination((1, 1)), 12)
    spec = fit_recurrence(seq, 2, 2)
    assert spec.c == (1, -3, 1)
    assert verify_recurrence(seq, synthesize_recurrence(CATALAN, LinearCombination((1, 1))))


def test_charpoly_d0_and_d1():
    assert charpoly_tensor(LinearCombination((1,)), 3, 5) == UniPoly([-1, 1], var="X")
    lam0, s, t = F(-2, 3), F(5), F(7, 2)
    assert charpoly_tensor(LinearCombination((lam0, 1)), s, t) == UniPoly(
        [t, -(lam0 + s), 1], var="X")


def test_charpoly_d2_spectrum():
    # quadratics X^2 - X - 6 and X^2 - 5X - 6; roots {3, -2} and {6, -1}
    lc = lambda_from_points(PointConfiguration.from_list([1, 5]))
    assert charpoly_tensor(lc, 0, -6) == UniPoly.from_roots([18, -3, -12, 2], var="X")


def test_charpoly_d3_against_explicit_spectrum():
    # s = 0, t = -6: point x gives X^2 - xX - 6
    roots = {1: (3, -2), 5: (6, -1), -1: (2, -3)}
    expected = [a * b * c for a in roots[1] for b in roots[5] for c in roots[-1]]
    lc = lambda_from_points(PointConfiguration.from_list([1, 5, -1]))
    assert charpoly_tensor(lc, 0, -6) == UniPoly.from_roots(expected, var="X")


def test_charpoly_is_monic_of_degree_power_of_two(rng):
    for d in range(4):
        p = charpoly_tensor(_random_lc(rng, d), sampling.rational(rng),
                            sampling.nonzero_rational(rng))
        assert p.degree == 2 ** d and p.leading == 1


def test_c1_value(rng):
    assert c1_value(LinearCombination((F(3, 2), 1)), 4) == -(F(3, 2) + 4)
    assert c1_value(LinearCombination((9, -2, 1)), 0) == -9
    for d in range(1, 4):
        for _ in range(5):
            lc = _random_lc(rng, d)
            s, t = sampling.rational(rng), sampling.nonzero_rational(rng)
            p = charpoly_tensor(lc, s, t)
            assert p.coeff(2 ** d - 1) == c1_value(lc, s)


def test_symmetry(rng):
    spec = RecurrenceSpec(2, (1, 7, 3), 3)
    assert symmetry_check(spec, 3, 1)
    assert not symmetry_check(spec, 2, 1)
    palin = RecurrenceSpec(4, (1, 2, 5, 2, 1), 5)
    assert symmetry_check(palin, 1, 2)
    for d in range(1, 4):
        for _ in range(5):
            lc = _random_lc(rng, d)
            s, t = sampling.rational(rng), sampling.nonzero_rational(rng)
            c = RecurrenceCoeffs((), s, (), t)
            spec = synthesize_recurrence(c, lc)
            assert symmetry_check(spec, t, d)
    with pytest.raises(ValueError):
        symmetry_check(RecurrenceSpec(1, (1, -1), 1), 1, 0)


def test_charpoly_depends_only_on_lambda(rng):
    pts = sampling.distinct_rationals(rng, 3)
    a = charpoly_tensor(lambda_from_points(PointConfiguration.from_list(pts)), 2, 3)
    b = charpoly_tensor(lambda_from_points(PointConfiguration.from_list(pts[::-1])), 2, 3)
    assert a == b


@pytest.mark.parametrize("c, d, expected", [
    (CATALAN, 1, (2, "remark2a")),
    (MOTZKIN, 3, (8, "remark2a")),
    (RecurrenceCoeffs((1,), 2, (3,), 1), 2, (5, "cor9")),
    (RecurrenceCoeffs((1, 2, 3), 2, (3,), 1), 1, (4, "remark2b")),
    (RecurrenceCoeffs((), 2, (3, 4, 5), 1), 2, (7, "remark2b")),
])
def test_window_rule(c, d, expected):
    assert window_rule(c, d) == expected


def test_catalan_window_starts_at_two(rng):
    for _ in range(5):
        lc = _random_lc(rng, 1)
        spec = synthesize_recurrence(CATALAN, lc)
        assert spec.validity_start == 2
        seq = scaled_hankel_seq(CATALAN, lc, 14)
        assert verify_recurrence(seq, spec)


def test_motzkin_pipeline_from_points(rng):
    for d in range(1, 4):
        lc = lambda_from_points(PointConfiguration.from_list(sampling.distinct_rationals(rng, d)))
        spec = synthesize_recurrence(MOTZKIN, lc)
        seq = scaled_hankel_seq(MOTZKIN, lc, spec.validity_start + 2 ** d + 8)
        assert verify_recurrence(seq, spec)


def test_window_is_tight_when_t0_differs():
    # with t_0 != t the first instance n = 2^d is not covered
    c = RecurrenceCoeffs((2,), 2, (2,), 1)
    lc = LinearCombination((3, 1))
    spec = synthesize_recurrence(c, lc)
    assert spec.validity_start == 3
    seq = scaled_hankel_seq(c, lc, 16)
    early = RecurrenceSpec(spec.order, spec.c, 2, "remark2a")
    assert verify_recurrence(seq, spec)
    assert not verify_recurrence(seq, early)


def test_long_prefixes_use_base_scaling(rng):
    for _ in range(5):
        c = sampling.recurrence_coeffs(rng, prefix=3)
        d = rng.randint(1, 2)
        lc = _random_lc(rng, d)
        spec = synthesize_recurrence(c, lc)
        seq = scaled_hankel_seq(c, lc, spec.validity_start + 2 ** d + 8, "base")
        assert verify_recurrence(seq, spec)


def test_constant_sequence():
    spec = RecurrenceSpec(1, (1, -1), 0)
    assert verify_recurrence([1] * 10, spec)


def test_verify_needs_enough_terms():
    spec = RecurrenceSpec(2, (1, -3, 1), 2)
    with pytest.raises(InsufficientTermsError):
        verify_recurrence([1, 2, 3, 4, 5, 6], spec)


def test_fit_simple_sequences():
    geo = [F(3) ** n for n in range(8)]
    assert fit_recurrence(geo, 1, 0).c == (1, -3)
    fib = [0, 1]
    while len(fib) < 12:
        fib.append(fib[-1] + fib[-2])
    assert fit_recurrence(fib, 2, 0).c == (1, -1, -1)
    assert fit_recurrence([1, 2, 4, 8, 17, 32, 64, 128, 256, 512], 1, 0) is None
    with pytest.raises(InsufficientTermsError):
        fit_recurrence([1, 2, 3], 1, 0)


def test_fit_tie_break_pads_minimal_recurrence():
    geo = [F(2) ** n for n in range(12)]
    assert fit_recurrence(geo, 3, 0).c == (1, -2, 0, 0)
    assert minimal_recurrence(geo, 3, 0).order == 1


def test_fit_recovers_charpoly_or_divisor(rng):
    for name in ("catalan", "motzkin", "schroeder_large"):
        c = get_sequence(name).coeffs
        for d in (1, 2):
            for _ in range(4):
                lc = _random_lc(rng, d)
                spec = synthesize_recurrence(c, lc)
                order = spec.order
                seq = scaled_hankel_seq(c, lc, spec.validity_start + 2 * order + 6)
                fitted = fit_recurrence(seq, order, spec.validity_start)
                if fitted.c != spec.c:
                    low = minimal_recurrence(seq, order, spec.validity_start)
                    assert low.order < order
                    _, rem = recurrence_poly(spec).divmod(recurrence_poly(low))
                    assert not rem
