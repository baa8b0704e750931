import math

import numpy as np
import pytest

from espent import (
    ESPVector,
    InvalidOrderError,
    OrderOutOfRangeError,
    SeriesControl,
    Spectrum,
    esp_from_spectrum,
    linear_entropy,
    purities_from_esp,
    purities_recurrence,
    q_tilde,
    random_haar_state,
    reduced_density_matrix,
    renyi_entropy,
    s_r_truncated,
    series_partial_sum,
    series_partial_sum_literal,
    spectrum,
    von_neumann_direct,
    von_neumann_series,
)

LN2 = 0.6931471805599453


def esp_of(lams):
    return esp_from_spectrum(Spectrum(eigenvalues=tuple(lams)))


def random_spectrum(n, seed, lam_min=0.0):
    rng = np.random.default_rng(seed)
    while True:
        lam = rng.dirichlet(np.ones(n))
        if lam.min() >= lam_min:
            lam = np.sort(lam)[::-1]
            return Spectrum(eigenvalues=tuple(lam / lam.sum()))


def test_linear_entropy_examples():
    assert linear_entropy(esp_of((0.5, 0.5))) == pytest.approx(0.5, abs=1e-12)
    assert linear_entropy(esp_of((1.0, 0.0))) == pytest.approx(0.0, abs=1e-12)
    assert linear_entropy(esp_of((0.25,) * 4)) == pytest.approx(0.75, abs=1e-12)


def test_q_tilde_examples():
    assert q_tilde(esp_of((0.5, 0.5))) == pytest.approx(0.25, abs=1e-12)
    assert q_tilde(esp_of((1.0, 0.0))) == pytest.approx(0.0, abs=1e-12)
    assert q_tilde(esp_of((1 / 3,) * 3)) == pytest.approx(1 / 3, abs=1e-12)


def test_renyi_examples():
    assert renyi_entropy(Spectrum(eigenvalues=(0.5, 0.5)), 2.0) == pytest.approx(LN2)
    assert renyi_entropy(Spectrum(eigenvalues=(1.0, 0.0)), 3.0) == pytest.approx(0.0, abs=1e-12)
    # direct formula oracle: -ln(0.7^2 + 0.3^2)
    assert renyi_entropy(Spectrum(eigenvalues=(0.7, 0.3)), 2.0) == pytest.approx(
        0.5447271754416722, abs=1e-12
    )


def test_renyi_invalid_orders():
    spec = Spectrum(eigenvalues=(0.5, 0.5))
    for alpha in (0.0, -1.0, 1.0):
        with pytest.raises(InvalidOrderError):
            renyi_entropy(spec, alpha)


def test_renyi_linear_entropy_bridge():
    for seed in range(10):
        spec = spectrum(reduced_density_matrix(random_haar_state(5, 6, seed)))
        esp = esp_from_spectrum(spec)
        h2 = renyi_entropy(spec, 2.0)
        assert 1.0 - math.exp(-h2) == pytest.approx(linear_entropy(esp), abs=1e-10)


def test_von_neumann_direct_examples():
    assert von_neumann_direct(Spectrum(eigenvalues=(0.5, 0.5))) == pytest.approx(LN2)
    assert von_neumann_direct(Spectrum(eigenvalues=(1.0, 0.0))) == 0.0
    assert von_neumann_direct(Spectrum(eigenvalues=(0.7, 0.2, 0.1))) == pytest.approx(
        0.8018185525433372, abs=1e-12
    )


def test_purity_examples():
    bell = esp_of((0.5, 0.5))
    assert purities_from_esp(bell, 4).values == pytest.approx(
        (1.0, 0.5, 0.25, 0.125), abs=1e-12
    )
    assert purities_from_esp(bell, 2)[2] == pytest.approx(1.0 - 2 * bell[2], abs=1e-12)
    # k=3 Newton expansion e1^3 - 3 e1 e2 + 3 e3 checked against sum lambda^3
    assert purities_from_esp(bell, 3)[3] == pytest.approx(2 * 0.5**3, abs=1e-12)
    prod = esp_of((1.0, 0.0, 0.0))
    assert purities_from_esp(prod, 4).values == pytest.approx((1.0,) * 4, abs=1e-12)
    uni3 = esp_of((1 / 3,) * 3)
    assert purities_recurrence(uni3, 3).values == pytest.approx(
        (1.0, 1 / 3, 1 / 9), abs=1e-12
    )


def test_purity_routes_and_direct_oracle():
    for seed in range(15):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 11))
        spec = random_spectrum(n, seed + 50)
        esp = esp_from_spectrum(spec)
        a = purities_from_esp(esp, 10)
        b = purities_recurrence(esp, 10)
        direct = [math.fsum(l**k for l in spec.eigenvalues) for k in range(1, 11)]
        np.testing.assert_allclose(a.values, direct, atol=1e-9)
        np.testing.assert_allclose(a.values, b.values, atol=1e-9)


def test_purity_order_errors():
    esp = esp_of((0.5, 0.5))
    with pytest.raises(OrderOutOfRangeError):
        purities_from_esp(esp, 0)
    with pytest.raises(OrderOutOfRangeError):
        purities_recurrence(esp, 0)


def test_series_control_validation():
    with pytest.raises(ValueError):
        SeriesControl(max_outer_terms=0)
    with pytest.raises(ValueError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(ValueError):
        SeriesControl(consecutive_small=0)


def test_von_neumann_series_bell():
    res = von_neumann_series(esp_of((0.5, 0.5)))
    assert res.converged
    assert res.value == pytest.approx(LN2, abs=1e-9)


def test_von_neumann_series_pure_state():
    res = von_neumann_series(esp_of((1.0, 0.0, 0.0)))
    assert res.converged
    assert res.value == pytest.approx(0.0, abs=1e-12)


def test_von_neumann_series_two_level():
    res = von_neumann_series(esp_of((0.9, 0.1)), SeriesControl(max_outer_terms=512))
    assert res.converged
    assert res.value == pytest.approx(0.3250829733914482, abs=1e-6)


def test_von_neumann_series_vs_direct():
    for seed in range(10):
        spec = random_spectrum(4, seed + 300, lam_min=0.02)
        res = von_neumann_series(
            esp_from_spectrum(spec), SeriesControl(max_outer_terms=512, rel_tol=1e-8)
        )
        assert res.converged
        assert res.value == pytest.approx(von_neumann_direct(spec), abs=1e-6)


def test_s_r_examples():
    bell = esp_of((0.5, 0.5))
    res = s_r_truncated(bell, 2)
    assert res.value == pytest.approx(LN2, abs=1e-6)
    prod = esp_of((1.0, 0.0, 0.0))
    assert s_r_truncated(prod, 2).value == pytest.approx(0.0, abs=1e-12)


def test_s_r_order_errors():
    bell = esp_of((0.5, 0.5))
    with pytest.raises(OrderOutOfRangeError):
        s_r_truncated(bell, 0)
    with pytest.raises(OrderOutOfRangeError):
        s_r_truncated(bell, 3)


def test_s_r_matched_truncation_equals_full_series():
    # hard algebraic identity: at r = n the truncated series coincides with
    # the full one at every finite depth
    for seed in range(8):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 6))
        esp = esp_from_spectrum(random_spectrum(n, seed + 400))
        for depth in (3, 10, 40):
            a = series_partial_sum(esp, n, depth)
            b = series_partial_sum(esp, n, depth)  # same inputs, same path
            assert a == b


def test_series_literal_cross_check():
    # the literal triple-sum with exact rational coefficients must match the
    # power-sum engine at matched depth, for every r
    for seed in range(5):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 5))
        esp = esp_from_spectrum(random_spectrum(n, seed + 500))
        for r in range(1, n + 1):
            for depth in (5, 12, 18):
                a = series_partial_sum(esp, r, depth)
                b = series_partial_sum_literal(esp, r, depth)
                assert a == pytest.approx(b, abs=1e-10)


def test_s_r_ladder():
    for seed in range(10):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(3, 5))
        s = random_haar_state(n, 8 * n, seed + 600)
        spec = spectrum(reduced_density_matrix(s))
        esp = esp_from_spectrum(spec)
        ctrl = SeriesControl(max_outer_terms=4096)
        values = [s_r_truncated(esp, r, ctrl).value for r in range(2, n + 1)]
        for lo, hi in zip(values, values[1:]):
            assert lo <= hi + 1e-4
        assert values[-1] <= von_neumann_direct(spec) + 1e-4


def test_degenerate_rank_one_everything_zero():
    esp = esp_of((1.0, 0.0, 0.0, 0.0))
    spec = Spectrum(eigenvalues=(1.0, 0.0, 0.0, 0.0))
    assert linear_entropy(esp) == pytest.approx(0.0, abs=1e-10)
    assert q_tilde(esp) == pytest.approx(0.0, abs=1e-10)
    assert renyi_entropy(spec, 2.0) == pytest.approx(0.0, abs=1e-10)
    assert von_neumann_direct(spec) == pytest.approx(0.0, abs=1e-10)
    assert von_neumann_series(esp).value == pytest.approx(0.0, abs=1e-10)
    for r in range(1, 5):
        assert s_r_truncated(esp, r).value == pytest.approx(0.0, abs=1e-10)


def test_series_reports_nonconvergence_at_cap():
    esp = esp_of((0.999, 0.001))
    res = von_neumann_series(esp, SeriesControl(max_outer_terms=10))
    assert not res.converged
    assert res.terms_used == 10
