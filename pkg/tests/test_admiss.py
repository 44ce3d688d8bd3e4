import math
from fractions import Fraction

import pytest

from steiner.admiss import (
    CAMERON_LIST,
    EQUATION_IDS,
    AdmissError,
    alltop_filter,
    cameron_bounds,
    cameron_equality_scan,
    case2_t5_filter,
    case2_t6_filter,
    comb_c_integral,
    divprop_filter,
    eq0_scan,
    flag_equation_check,
    k_upper_bound,
    lambda_i,
    param_arithmetic,
    steiner_integral,
    subcase_equation_scan,
)


def test_witt_parameters():
    ps = param_arithmetic(5, 24, 8)
    assert ps.feasible
    assert (ps.b, ps.r, ps.lambda2) == (759, 253, 77)
    assert ps.b * 8 == 24 * ps.r
    assert ps.r * 7 == ps.lambda2 * 23


def test_failing_identity():
    ps = param_arithmetic(6, 32, 7)
    assert not ps.feasible and ps.failure == "r"
    assert ps.as_dict()["r"] == "56637/2"
    with pytest.raises(AdmissError):
        param_arithmetic(5, 4, 8)


def test_identities_hold_when_feasible():
    for t in (3, 4, 5):
        for v in range(t + 2, 40):
            for k in range(t + 1, v):
                ps = param_arithmetic(t, v, k)
                if ps.feasible:
                    assert ps.b * k == v * ps.r
                    assert ps.r * (k - 1) == ps.lambda2 * (v - 1)
                    assert math.comb(v, t) == ps.b * math.comb(k, t)


def test_lambda_i():
    assert [lambda_i(5, 24, 8, i) for i in range(6)] == [759, 253, 77, 21, 5, 1]
    assert steiner_integral(5, 12, 6)
    assert not steiner_integral(5, 13, 6)


def test_cameron_scan():
    assert cameron_equality_scan() == list(CAMERON_LIST)
    assert cameron_bounds(5, 24, 8).listed
    assert cameron_bounds(5, 24, 9).b_ok is False


@pytest.mark.parametrize("t", [3, 4, 5, 6])
def test_k_bound_matches_float(t):
    for v in range(5, 3000):
        expect = math.floor(math.sqrt(v) + 1.5 + (t - 3))
        assert k_upper_bound(t, v) == expect


def test_k_bound_examples():
    assert k_upper_bound(5, 24) == 8
    assert k_upper_bound(5, 12) == 6
    assert k_upper_bound(6, 8) == 7
    with pytest.raises(AdmissError):
        k_upper_bound(7, 30)


def test_divprop_and_flag_equation():
    assert divprop_filter(5, 24, 8, 6072 // 24)
    assert not divprop_filter(5, 16, 6, 2520)
    assert not divprop_filter(6, 32, 7, 10**9)
    # PSL(2,23) on the Witt design: |G_xy| = 11, |G_xB| = 1
    assert flag_equation_check(5, 24, 8, 11, 1)
    assert not flag_equation_check(5, 24, 8, 11, 2)


def test_alltop():
    assert all(alltop_filter(3, k) for k in (6, 7, 8))
    assert not any(alltop_filter(d, k) for d in range(4, 21) for k in (6, 7, 8))


def test_eq0_scan_unique():
    assert eq0_scan(2048) == [(23, 8, 1)]
    assert case2_t5_filter(23, 8, 1, 2)


def test_t6_filter():
    assert not case2_t6_filter(64, 11)
    assert not comb_c_integral(6, 16, 7)
    with pytest.raises(AdmissError):
        case2_t6_filter(6, 7)


def test_t6_filter_bounded_scan():
    from steiner.gf import prime_power
    for q in range(4, 5000):
        if prime_power(q) is None:
            continue
        for k in range(7, min(k_upper_bound(6, q + 1), q) + 1):
            assert not case2_t6_filter(q, k)


@pytest.mark.parametrize("eq_id", EQUATION_IDS)
def test_subcase_scans_empty(eq_id):
    assert subcase_equation_scan(eq_id) == []


def test_subcase_scan_wider_caps():
    for eq_id in ("E1", "E2", "E3", "E8"):
        assert subcase_equation_scan(eq_id, 20) == []


def test_e4_gcd_step():
    # s = 2, u - w = 1: qb = 3^(2^w) is odd, so gcd(qb^4 - 5 qb^2 + 6, qb - 2) = gcd(2, qb - 2) = 1
    for w in range(1, 5):
        qb = 3 ** (2**w)
        assert math.gcd(qb**4 - 5 * qb**2 + 6, qb - 2) == 1
        assert 2 * (qb**2 - 2) * (qb**2 - 3) != (qb - 1) * (qb - 2) * (qb - 3) * (qb - 4) * 2


def test_unknown_equation():
    with pytest.raises(AdmissError):
        subcase_equation_scan("E9")
