import math
from itertools import product

import numpy as np
import pytest
import scipy.linalg

from pigouq.errors import DomainError
from pigouq.ewl import GAMMA_MAX, entangler, ewl_outcomes
from pigouq.linalg import KET_00, dagger, tensor_product
from pigouq.strategies import resolve, unitary_from_angles

INV_SQRT2 = 1 / math.sqrt(2)


def entangler_by_expm(gamma):
    """Independent construction via the matrix exponential."""
    p2 = np.array([[0, 1], [-1, 0]], dtype=complex)
    return scipy.linalg.expm(-1j * (gamma / 2) * np.kron(p2, p2))


def outcomes_by_hand(ua, ub, gamma):
    """Protocol evolution spelled out with raw numpy ops."""
    j = entangler_by_expm(gamma)
    psi = j.conj().T @ np.kron(ua, ub) @ j @ np.array([1, 0, 0, 0], dtype=complex)
    return np.abs(psi) ** 2


def test_zero_angle_entangler_is_identity():
    assert np.allclose(entangler(0.0), np.eye(4), atol=0)


def test_maximal_entangler_matrix():
    expected = np.array(
        [
            [INV_SQRT2, 0, 0, -1j * INV_SQRT2],
            [0, INV_SQRT2, 1j * INV_SQRT2, 0],
            [0, 1j * INV_SQRT2, INV_SQRT2, 0],
            [-1j * INV_SQRT2, 0, 0, INV_SQRT2],
        ]
    )
    assert np.allclose(entangler(GAMMA_MAX), expected, atol=1e-15)


def test_entangler_is_unitary_at_generic_angle():
    j = entangler(0.3)
    assert np.allclose(j @ dagger(j), np.eye(4), atol=1e-15)


def test_entangler_matches_matrix_exponential():
    for gamma in (0.0, 0.2, 0.77, 1.1, GAMMA_MAX):
        assert np.allclose(entangler(gamma), entangler_by_expm(gamma), atol=1e-12)


@pytest.mark.parametrize("gamma", [-0.01, GAMMA_MAX + 0.01, 4.0])
def test_out_of_range_gamma_rejected(gamma):
    with pytest.raises(DomainError):
        entangler(gamma)
    with pytest.raises(DomainError):
        ewl_outcomes(resolve("P1"), resolve("P1"), gamma)


def test_identity_pair_stays_on_upper_edge():
    dist = ewl_outcomes(resolve("P1"), resolve("P1"), GAMMA_MAX)
    assert dist.as_tuple() == (1.0, 0.0, 0.0, 0.0)


def test_miracle_pair_is_uniform():
    dist = ewl_outcomes(resolve("M"), resolve("M"), GAMMA_MAX)
    assert np.allclose(dist.as_tuple(), (0.25, 0.25, 0.25, 0.25), atol=1e-15)


def test_identity_against_phase_lands_on_lower_edge():
    dist = ewl_outcomes(resolve("P1"), resolve("Q"), GAMMA_MAX)
    assert np.allclose(dist.as_tuple(), (0, 0, 0, 1), atol=1e-15)


def test_unentangled_double_flip():
    dist = ewl_outcomes(resolve("P2"), resolve("P2"), 0.0)
    assert dist.as_tuple() == (0.0, 0.0, 0.0, 1.0)


def test_classical_limit_is_a_point_mass():
    tags = ("P1", "P2")
    for (ia, ta), (ib, tb) in product(enumerate(tags), repeat=2):
        dist = ewl_outcomes(resolve(ta), resolve(tb), 0.0)
        expected = [0.0] * 4
        expected[2 * ia + ib] = 1.0
        assert np.allclose(dist.as_tuple(), expected, atol=1e-15)


def test_swapping_players_swaps_the_cross_outcomes():
    tags = ("P1", "P2", "Q", "M")
    for ta, tb in product(tags, repeat=2):
        d1 = ewl_outcomes(resolve(ta), resolve(tb), GAMMA_MAX)
        d2 = ewl_outcomes(resolve(tb), resolve(ta), GAMMA_MAX)
        assert abs(d1.p00 - d2.p00) < 1e-12
        assert abs(d1.p11 - d2.p11) < 1e-12
        assert abs(d1.p01 - d2.p10) < 1e-12
        assert abs(d1.p10 - d2.p01) < 1e-12


def test_outcomes_match_hand_evolution_on_random_draws():
    rng = np.random.default_rng(42)
    for _ in range(200):
        ua = unitary_from_angles(rng.uniform(0, math.pi), rng.uniform(0, math.pi / 2))
        ub = unitary_from_angles(rng.uniform(0, math.pi), rng.uniform(0, math.pi / 2))
        gamma = rng.uniform(0, GAMMA_MAX)
        got = ewl_outcomes(ua, ub, gamma).as_tuple()
        want = outcomes_by_hand(ua, ub, gamma)
        assert np.allclose(got, want, atol=1e-12)


def test_outcomes_normalize_across_random_draws():
    rng = np.random.default_rng(20250811)
    for _ in range(1000):
        ua = unitary_from_angles(rng.uniform(0, math.pi), rng.uniform(0, math.pi / 2))
        ub = unitary_from_angles(rng.uniform(0, math.pi), rng.uniform(0, math.pi / 2))
        gamma = rng.uniform(0, GAMMA_MAX)
        # both the exposed distribution and the raw amplitudes
        assert abs(sum(ewl_outcomes(ua, ub, gamma).as_tuple()) - 1) <= 1e-12
        j = entangler(gamma)
        psi = dagger(j) @ tensor_product(ua, ub) @ j @ KET_00
        assert abs(float(np.sum(np.abs(psi) ** 2)) - 1) <= 1e-12


def test_non_unitary_strategy_rejected():
    bad = np.array([[2, 0], [0, 1]], dtype=complex)
    with pytest.raises(DomainError):
        ewl_outcomes(bad, resolve("P1"), GAMMA_MAX)
    with pytest.raises(DomainError):
        ewl_outcomes(resolve("P1"), bad, GAMMA_MAX)
