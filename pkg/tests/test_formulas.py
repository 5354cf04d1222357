import math
import random

import pytest

from cliquemin.formulas import (
    ParameterError,
    Surd,
    balanced_sizes,
    clique_params,
    conjecture1_bound,
    conjecture2_bound,
    delta_m,
    fg_offsets,
    fg_valid_ms,
    min_kk_count,
    parity_term,
    surplus,
    triangle_lower_bound,
    triangle_params,
    turan_edge_count,
    y_vector,
)
from cliquemin.constructions import turan_graph


def test_parity_term():
    assert [parity_term(n) for n in range(1, 7)] == [1, 0, 1, 0, 1, 0]


def test_turan_edge_count_examples():
    assert turan_edge_count(10, 2) == 25
    assert turan_edge_count(10, 3) == 33
    assert turan_edge_count(12, 3) == 48


def test_turan_edge_count_matches_explicit_graph():
    for parts in range(2, 7):
        for n in range(parts, 401, 13):
            assert turan_edge_count(n, parts) == turan_graph(n, parts).edge_count()


def test_triangle_params_examples():
    p = triangle_params(50, 5, 1)
    assert (p.m_st, p.r3, p.n_minus) == (0, 4, 23)
    p = triangle_params(50, 4, 1)
    assert (p.m_st, p.r3) == (2, 2)
    p = triangle_params(51, 2, 1)
    assert (p.m_st, p.r3) == (1, 1)
    assert triangle_lower_bound(51, 2, 1) == 51 - 2


def test_triangle_params_invariants():
    for n in (40, 41):
        for s in range(2, 21):
            for t in range(1, s):
                p = triangle_params(n, s, t)
                assert 4 * (s - t - p.m_st) + p.parity_term == p.r3 ** 2
                assert p.n_plus + p.n_minus == n
                assert p.n_plus - p.n_minus == p.r3
                # m_st is minimal: no smaller m gives a perfect square
                for m in range(p.m_st):
                    root = math.isqrt(4 * (s - t - m) + p.parity_term)
                    assert root * root != 4 * (s - t - m) + p.parity_term


def test_surplus_characterization():
    # zero exactly when s-t = p^2-1 (even n) or s-t = p(p+1)-1 (odd n)
    for s in range(2, 21):
        for t in range(1, s):
            d = s - t
            even_zero = any(d == p * p - 1 for p in range(1, 10))
            odd_zero = any(d == p * (p + 1) - 1 for p in range(1, 10))
            assert surplus(40, s, t) >= 0
            assert (surplus(40, s, t) == 0) == even_zero
            assert (surplus(41, s, t) == 0) == odd_zero


def test_surplus_examples():
    assert surplus(40, 4, 1) == 0
    assert surplus(41, 2, 1) == 0
    assert surplus(40, 5, 1) == 4


def test_triangle_lower_bound_examples():
    assert triangle_lower_bound(100, 2, 1) == 98
    assert triangle_lower_bound(100, 10, 1) == 470
    assert triangle_lower_bound(101, 2, 1) == 99


def test_conjecture1_bound_examples():
    assert conjecture1_bound(100, 10, 1) == 482
    assert conjecture1_bound(100, 2, 1) == 98
    assert conjecture1_bound(101, 2, 1) == 99


def test_y_vector():
    assert y_vector(12, 4) == (5, 4, 3)
    assert y_vector(13, 4) == (5, 4, 4)
    assert y_vector(14, 4) == (6, 4, 4)
    for n in range(12, 60):
        for k in (4, 5):
            assert sum(y_vector(n, k)) == n


def test_min_kk_count():
    for s in range(2, 6):
        assert min_kk_count(12, 4, s) == 12 * s
        assert min_kk_count(13, 4, s) == 16 * s - 4
        assert min_kk_count(14, 4, s) == 16 * s


def test_clique_params():
    p = clique_params(30, 4, 4, 1)  # s-t=3, r=0
    assert p.rk.is_integer() and p.rk.as_integer() == 3
    assert p.n_minus_is_integer and p.n_minus_int == 9
    p = clique_params(12, 4, 11, 1)
    assert not p.rk.is_integer()
    assert p.rk.radicand == 120 and p.rk.denom == 2  # sqrt(120)/2 = sqrt(30)
    assert not p.n_minus_is_integer


def test_delta0_equals_rk_scaled():
    rng = random.Random(1)
    for _ in range(200):
        k = rng.randint(4, 7)
        n = rng.randint(k, 120)
        s = rng.randint(2, 12)
        t = rng.randint(1, s - 1)
        p = clique_params(n, k, s, t)
        d0 = delta_m(n, k, s, t, 0)
        # Delta_0 = R_k/(k-1): compare radicand/denom pairs by cross-squaring
        assert d0.radicand * (p.rk.denom * (k - 1)) ** 2 == p.rk.radicand * d0.denom ** 2


def test_delta_m_monotone_and_vanishing():
    for m in range(0, 10):
        d = delta_m(30, 4, 11, 1, m)
        if m > 0:
            prev = delta_m(30, 4, 11, 1, m - 1)
            assert d < prev
    assert delta_m(30, 4, 11, 8, 3).radicand == 0
    d = delta_m(30, 4, 11, 1, 0)
    assert d.radicand == 2 * 3 * 2 * 10 and d.denom == 6
    with pytest.raises(ParameterError):
        delta_m(30, 4, 11, 1, 11)


def test_surd_comparisons():
    assert Surd(2, 1) < Surd(3, 1)
    assert Surd(8, 2).same_value(Surd(2, 1))
    assert not Surd(2, 1).same_value(Surd(3, 1))
    with pytest.raises(ParameterError):
        Surd(-1, 1)
    with pytest.raises(ParameterError):
        Surd(3, 1).as_integer()


def test_fg_offsets_examples():
    f, g = fg_offsets(2, 1, "even", 0)
    assert (f.doubled, g.doubled) == (-4, 0)
    f, _ = fg_offsets(5, 1, "even", 0)
    assert f.doubled == -20
    with pytest.raises(ParameterError):
        fg_offsets(4, 1, "even", 1)  # 4(s-t-m) = 8 is not a perfect square


def test_fg_inequality_s7_t2():
    for parity in ("even", "odd"):
        valid = fg_valid_ms(7, 2, parity)
        m_st = valid[0][0]
        f_at = fg_offsets(7, 2, parity, m_st)[0].doubled
        g_min = min(fg_offsets(7, 2, parity, m)[1].doubled for m, _ in valid)
        assert f_at <= g_min


def test_fg_offsets_are_n_independent():
    # recomputing full f, g at two even n gives identical differences
    s, t = 6, 2
    for m, root in fg_valid_ms(s, t, "even"):
        for n in (1000, 2000):
            f_full = s * n / 2 - s * root / 2 - m
            g_full = s * n / 2 - (s - 2) * root / 2 - 2 * m
            f2, g2 = fg_offsets(s, t, "even", m)
            assert f_full - s * n / 2 == f2.doubled / 2
            assert g_full - s * n / 2 == g2.doubled / 2


def test_conjecture2_bound():
    assert conjecture2_bound(12, 4) == 24
    assert conjecture2_bound(13, 4) == 28
    assert conjecture2_bound(14, 4) == 32


def test_balanced_sizes():
    assert balanced_sizes(13, 3) == (5, 4, 4)
    assert balanced_sizes(12, 4) == (3, 3, 3, 3)
