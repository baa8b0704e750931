import numpy as np
import pytest

from espent import (
    OrderOutOfRangeError,
    WrongPortDomainError,
    antisym_weight,
    beamsplitter_transform,
    build_two_copy_state,
    bunching_probability,
    esp_from_spectrum,
    fermionic_encoding_probability,
    ordered_pair,
    random_haar_state,
    reduced_density_matrix,
    spectrum,
    validate_state,
)
from conftest import random_product_state


def test_build_two_copy_bell(bell_state):
    js = build_two_copy_state(bell_state)
    assert len(js.terms) == 4
    for env in js.terms.values():
        assert np.vdot(env, env).real == pytest.approx(0.25, abs=1e-12)
    assert js.total_norm_squared() == pytest.approx(1.0, abs=1e-10)


def test_build_two_copy_trivial_level():
    s = validate_state(np.array([[0.6, 0.8]]))
    js = build_two_copy_state(s)
    assert list(js.terms) == [((1, 0), (2, 0))]


def test_build_two_copy_product_env_structure():
    s = random_product_state(3, 4, seed=0)
    js = build_two_copy_state(s)
    b = s.amplitudes[np.argmax(np.linalg.norm(s.amplitudes, axis=1))]
    ref = np.kron(b, b)
    ref = ref / np.linalg.norm(ref)
    for env in js.terms.values():
        overlap = abs(np.vdot(ref, env))
        assert overlap == pytest.approx(np.linalg.norm(env), abs=1e-12)


def test_ordered_pair_sign_and_exclusion():
    env = np.array([1.0 + 0j])
    assert ordered_pair((3, 0), (3, 0), env) is None
    key, signed = ordered_pair((3, 1), (3, 0), env)
    assert key == ((3, 0), (3, 1))
    np.testing.assert_array_equal(signed, -env)
    key2, signed2 = ordered_pair((3, 0), (3, 1), env)
    assert key2 == key
    np.testing.assert_array_equal(signed2, env)


def test_canonicalization_idempotent():
    env = np.array([0.3 + 0.4j, 0.1, 0.0, 0.2])
    key, signed = ordered_pair((4, 2), (3, 1), env)
    key2, signed2 = ordered_pair(*key, signed)
    assert key2 == key
    np.testing.assert_array_equal(signed2, signed)


def test_beamsplitter_unitary():
    for seed in range(5):
        s = random_haar_state(4, 5, seed)
        out = beamsplitter_transform(build_two_copy_state(s))
        assert out.total_norm_squared() == pytest.approx(1.0, abs=1e-10)
        assert out.ports() <= {3, 4}


def test_beamsplitter_rejects_output_ports():
    s = random_haar_state(2, 2, seed=1)
    out = beamsplitter_transform(build_two_copy_state(s))
    with pytest.raises(WrongPortDomainError):
        beamsplitter_transform(out)


def test_bunching_rejects_input_ports():
    s = random_haar_state(2, 2, seed=2)
    with pytest.raises(WrongPortDomainError):
        bunching_probability(build_two_copy_state(s))


def test_hom_dip_single_level():
    # one internal level: identical fermions never bunch
    s = validate_state(np.array([[0.6, 0.8j]]))
    p = fermionic_encoding_probability(s)
    assert p == pytest.approx(0.0, abs=1e-12)


def test_bunching_bell_is_quarter(bell_state):
    assert fermionic_encoding_probability(bell_state) == pytest.approx(0.25, abs=1e-10)


def test_bunching_product_states_forbidden():
    for seed in range(10):
        s = random_product_state(4, 5, seed)
        assert fermionic_encoding_probability(s) == pytest.approx(0.0, abs=1e-12)


def test_bunching_matches_e2():
    for seed in range(20):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 9))
        d = int(rng.integers(2, 9))
        s = random_haar_state(n, d, seed + 40)
        esp = esp_from_spectrum(spectrum(reduced_density_matrix(s)))
        assert fermionic_encoding_probability(s) == pytest.approx(esp[2], abs=1e-10)


def test_bunching_probability_range():
    for seed in range(10):
        s = random_haar_state(5, 5, seed + 90)
        p = fermionic_encoding_probability(s)
        assert -1e-12 <= p <= 0.5 + 1e-12


def test_antisym_weight_r1_and_r2(bell_state):
    rho = reduced_density_matrix(bell_state)
    assert antisym_weight(rho, 1) == pytest.approx(1.0, abs=1e-12)
    # (1 - Tr rho^2) / 2 for the Bell state
    assert antisym_weight(rho, 2) == pytest.approx(0.25, abs=1e-12)


def test_antisym_weight_uniform_r3():
    rho = reduced_density_matrix(validate_state(np.eye(3) / np.sqrt(3.0)))
    assert antisym_weight(rho, 3) == pytest.approx(1 / 27, abs=1e-12)


def test_antisym_weight_matches_esp():
    for seed in range(8):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 6))
        s = random_haar_state(n, n + 3, seed + 60)
        rho = reduced_density_matrix(s)
        esp = esp_from_spectrum(spectrum(rho))
        for r in range(1, min(n, 4) + 1):
            assert antisym_weight(rho, r) == pytest.approx(esp[r], abs=1e-8)


def test_antisym_weight_order_range():
    rho = reduced_density_matrix(random_haar_state(3, 3, seed=7))
    with pytest.raises(OrderOutOfRangeError):
        antisym_weight(rho, 0)
    with pytest.raises(OrderOutOfRangeError):
        antisym_weight(rho, 7)
