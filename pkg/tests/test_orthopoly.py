from fractions import Fraction as F

import pytest

from hankel_moments import sampling
from hankel_moments.exact_core import UniPoly, det_fraction_free
from hankel_moments.orthopoly import (
    DegenerateFunctionalError,
    InsufficientMomentsError,
    MomentSequence,
    RecurrenceCoeffs,
    apply_functional,
    build_family,
    chebyshev_u,
    hankel_base_det,
    hankel_matrix,
    moments_from_coeffs,
    poly_from_moments,
)

MOTZKIN = RecurrenceCoeffs((), 1, (), 1)
SCHROEDER = RecurrenceCoeffs((2,), 3, (), 2)


def test_coeff_accessors_and_json():
    c = RecurrenceCoeffs((F(1, 2),), 3, (2, 5), F(-1, 3))
    assert [c.s(i) for i in range(3)] == [F(1, 2), 3, 3]
    assert [c.t(i) for i in range(4)] == [2, 5, F(-1, 3), F(-1, 3)]
    doc = c.to_json()
    assert doc == {"s_prefix": ["1/2"], "s_tail": "3", "t_prefix": ["2", "5"], "t_tail": "-1/3"}
    assert RecurrenceCoeffs.from_json(doc) == c


def test_zero_t_rejected():
    with pytest.raises(ValueError):
        RecurrenceCoeffs((), 1, (0,), 1)
    with pytest.raises(ValueError):
        RecurrenceCoeffs((), 1, (), 0)


def test_motzkin_and_schroeder_moments():
    assert list(moments_from_coeffs(MOTZKIN, 7).values) == [1, 1, 2, 4, 9, 21, 51]
    assert list(moments_from_coeffs(SCHROEDER, 5).values) == [1, 2, 6, 22, 90]


def test_generic_low_moments(rng):
    for _ in range(10):
        c = sampling.recurrence_coeffs(rng)
        m = moments_from_coeffs(c, 3)
        assert m.source == "from-coefficients"
        assert list(m.values) == [1, c.s(0), c.s(0) ** 2 + c.t(0)]


def test_family_first_members():
    c = RecurrenceCoeffs((F(1, 2), 3), -1, (7,), 2)
    fam = build_family(c, "p", 2)
    x = UniPoly.x()
    assert fam[1] == x - F(1, 2)
    assert fam[2] == (x - 3) * (x - F(1, 2)) - 7
    assert fam.norms[:3] == (1, 7, 14)


def test_motzkin_family_is_shifted_chebyshev():
    fam = build_family(MOTZKIN, "p", 12)
    us = chebyshev_u(12)
    arg = UniPoly([F(-1, 2), F(1, 2)])
    for n in range(13):
        assert fam[n] == us[n].compose(arg)


def test_f_family_duality(rng):
    for _ in range(10):
        c = sampling.recurrence_coeffs(rng)
        p = build_family(c, "p", 12)
        f = build_family(c, "f", 12)
        minus_x = UniPoly([0, -1])
        for n in range(13):
            assert f[n] == (-1) ** n * p[n].compose(minus_x)


def test_orthogonality(rng):
    for _ in range(10):
        c = sampling.recurrence_coeffs(rng)
        fam = build_family(c, "p", 6)
        m = moments_from_coeffs(c, 13)
        for i in range(7):
            for j in range(7):
                val = apply_functional(m, fam[i] * fam[j])
                assert val == (fam.norms[i] if i == j else 0)


def test_apply_functional_basics():
    m = moments_from_coeffs(SCHROEDER, 4)
    assert apply_functional(m, UniPoly([1])) == 1
    assert apply_functional(m, UniPoly.x()) == 2
    with pytest.raises(InsufficientMomentsError):
        apply_functional(m, UniPoly.x() ** 5)


def test_poly_from_moments():
    m = moments_from_coeffs(MOTZKIN, 4)
    assert poly_from_moments(m, 0) == UniPoly([1])
    assert poly_from_moments(m, 1) == UniPoly([-1, 1])


def test_poly_from_moments_matches_family(rng):
    for _ in range(10):
        c = sampling.recurrence_coeffs(rng)
        fam = build_family(c, "p", 5)
        m = moments_from_coeffs(c, 12)
        for n in range(6):
            assert poly_from_moments(m, n) == fam[n]


def test_poly_from_moments_degenerate():
    m = MomentSequence((1, 1, 1, 1, 1, 1))
    with pytest.raises(DegenerateFunctionalError) as info:
        poly_from_moments(m, 2)
    assert info.value.size == 2


def test_hankel_base_det_examples():
    c = RecurrenceCoeffs((), 0, (3, 5), 7)
    assert hankel_base_det(c, 0) == 1
    assert hankel_base_det(c, 1) == 1
    assert hankel_base_det(c, 3) == 3 ** 2 * 5
    assert [hankel_base_det(SCHROEDER, n) for n in range(1, 5)] == [1, 2, 8, 64]


def test_product_formula_matches_determinant(rng):
    for _ in range(20):
        c = sampling.recurrence_coeffs(rng)
        m = moments_from_coeffs(c, 15)
        for n in range(9):
            assert det_fraction_free(hankel_matrix(m.values, n)) == hankel_base_det(c, n)


def test_chebyshev_u_and_generating_function():
    us = chebyshev_u(8)
    x = UniPoly.x()
    assert us[0] == UniPoly([1]) and us[1] == 2 * x
    assert us[2] == 4 * x * x - 1
    # (1 - 2xz + z^2) * sum U_n z^n = 1, coefficient by coefficient
    for n in range(9):
        coeff = us[n]
        if n >= 1:
            coeff = coeff - 2 * x * us[n - 1]
        if n >= 2:
            coeff = coeff + us[n - 2]
        assert coeff == (UniPoly([1]) if n == 0 else UniPoly([]))
