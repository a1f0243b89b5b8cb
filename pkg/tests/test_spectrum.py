import math

import numpy as np
import pytest

from circpow.errors import AmbiguousToleranceWarning, DomainError
from circpow.graphs import CirculantGraph, CircuitPower
from circpow.oracle import symmetric_eigenvalues
from circpow.spectrum import (
    circuit_power_spectrum,
    circulant_spectrum,
    dirichlet_ratio,
    dirichlet_step,
    group_spectrum,
    mult_two_bound,
)
from circpow.graphs import adjacency

GOLDEN = 0.6180339887498949  # 2 cos(2 pi / 5), confirmed by the dense eigensolver


class TestCirculantSpectrum:
    def test_hexagon(self):
        lam = circulant_spectrum(CirculantGraph(6, {1, 5}))
        assert np.allclose(lam, [2, 1, -1, -2, -1, 1], atol=1e-12)

    def test_k4(self):
        lam = circulant_spectrum(CirculantGraph(4, {1, 2, 3}))
        assert np.allclose(lam, [3, -1, -1, -1], atol=1e-12)

    def test_pentagon_golden_ratio(self):
        lam = circulant_spectrum(CirculantGraph(5, {1, 4}))
        assert lam[1] == pytest.approx(GOLDEN, abs=1e-12)

    def test_reflection_symmetry_is_bitwise(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            n = int(rng.integers(3, 120))
            half = rng.choice(np.arange(1, n // 2 + 1),
                              size=int(rng.integers(1, n // 2 + 1)), replace=False)
            jumps = {int(j) for j in half} | {n - int(j) for j in half}
            jumps.discard(0)
            lam = circulant_spectrum(CirculantGraph(n, jumps))
            for r in range(1, n):
                assert lam[r] == lam[n - r]


class TestCircuitPowerSpectrum:
    def test_lambda0_is_2d(self):
        assert circuit_power_spectrum(CircuitPower(6, 1))[0] == 2.0
        assert circuit_power_spectrum(CircuitPower(36, 14))[0] == 28.0

    def test_regularity_eigenvalue_is_strict_maximum(self):
        for n, d in [(7, 2), (25, 8), (36, 14), (100, 13)]:
            lam = circuit_power_spectrum(CircuitPower(n, d))
            assert lam[0] == 2 * d
            assert np.all(lam[1:] < 2 * d)

    def test_complete_routes_to_kn(self):
        lam = circuit_power_spectrum(CircuitPower(7, 3))
        assert lam[0] == 6.0
        assert np.allclose(lam[1:], -1.0)

    def test_c36_14_minus_two_multiplicity_four(self):
        lam = circuit_power_spectrum(CircuitPower(36, 14))
        assert int(np.count_nonzero(np.abs(lam + 2) <= 1e-9)) == 4

    def test_agrees_with_cosine_sum(self):
        # the two closed forms are the same function written two ways
        for n in range(3, 150, 7):
            for d in range(1, (n - 2) // 2 + 1, 3):
                g = CircuitPower(n, d)
                lam_ratio = circuit_power_spectrum(g)
                lam_sum = circulant_spectrum(g.as_circulant())
                assert np.max(np.abs(lam_ratio - lam_sum)) < 1e-9, (n, d)

    def test_ratio_form_reflection_symmetry(self):
        for n, d in [(36, 14), (101, 30), (300, 149)]:
            lam = circuit_power_spectrum(CircuitPower(n, d))
            for r in range(1, n):
                assert abs(lam[r] - lam[n - r]) <= 1e-12

    def test_trace_and_energy_identities(self):
        for n, d in [(10, 2), (36, 14), (55, 11)]:
            g = CircuitPower(n, d)
            lam = circulant_spectrum(g.as_circulant())
            assert abs(lam.sum()) <= 1e-9 * n
            assert abs((lam**2).sum() - n * 2 * d) <= 1e-6 * n


class TestGroupSpectrum:
    def test_hexagon_groups(self):
        grouped = group_spectrum(circulant_spectrum(CirculantGraph(6, {1, 5})), tol=1e-9)
        assert [(round(v), m) for v, m in grouped.as_pairs()] == [(-2, 1), (-1, 2), (1, 2), (2, 1)]

    def test_single_entry(self):
        grouped = group_spectrum([1.5], tol=1e-9)
        assert grouped.as_pairs() == [(1.5, 1)]

    def test_c12_4_group_at_minus_three(self):
        # dense eigensolver confirms multiplicity 2 at -3
        grouped = group_spectrum(circuit_power_spectrum(CircuitPower(12, 4)), tol=1e-9)
        assert grouped.multiplicity_of(-3.0) == 2

    def test_indices_partition_and_multiplicities_sum(self):
        lam = circuit_power_spectrum(CircuitPower(30, 7))
        grouped = group_spectrum(lam)
        seen = [i for grp in grouped.groups for i in grp.indices]
        assert sorted(seen) == list(range(30))
        assert sum(grp.multiplicity for grp in grouped.groups) == 30
        values = [grp.value for grp in grouped.groups]
        assert values == sorted(values)

    def test_reflection_always_merged(self):
        lam = circuit_power_spectrum(CircuitPower(24, 5))
        grouped = group_spectrum(lam)
        for grp in grouped.groups:
            for r in grp.indices:
                if r != 0:
                    assert (24 - r) in grp.indices

    def test_near_groups_warn(self):
        with pytest.warns(AmbiguousToleranceWarning):
            group_spectrum([0.0, 5e-9], tol=1e-9, index_order=False)

    def test_rejects_bad_tolerance(self):
        with pytest.raises(DomainError):
            group_spectrum([1.0], tol=0.0)


class TestDirichletRatio:
    @pytest.mark.parametrize("d", [1, 2, 3, 7, 20])
    def test_endpoints_continuous_extension(self, d):
        assert dirichlet_ratio(d, 0.0) == 2 * d + 1
        assert dirichlet_ratio(d, 2 * math.pi) == 2 * d + 1

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 9])
    def test_value_at_pi_is_plus_minus_one(self, d):
        assert dirichlet_ratio(d, math.pi) == pytest.approx((-1) ** d, abs=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 5, 11])
    def test_zeros_at_multiples_of_step(self, d):
        q = dirichlet_step(d)
        for k in range(1, 2 * d + 1):
            assert abs(dirichlet_ratio(d, k * q)) < 1e-10, k

    def test_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            dirichlet_ratio(3, -0.1)
        with pytest.raises(DomainError):
            dirichlet_ratio(3, 7.0)


class TestMultTwoBound:
    def test_values_for_d1(self):
        b = mult_two_bound(1)
        assert b.sharp == pytest.approx(0.15470053837925146, abs=1e-14)
        assert b.relaxed == pytest.approx(1 / math.pi - 1, abs=1e-14)

    def test_sharp_dominates_relaxed(self):
        for d in range(1, 101):
            b = mult_two_bound(d)
            assert b.sharp > b.relaxed

    def test_ratio_trend_toward_one(self):
        # u(2q)/(d/pi) stays above 1 and decreases monotonically
        ratios = []
        for d in [1, 2, 5, 10, 100, 1000, 10000]:
            b = mult_two_bound(d)
            ratios.append((b.sharp + 1) / (d / math.pi))
        assert all(r > 1 for r in ratios)
        assert all(a > b for a, b in zip(ratios, ratios[1:]))
        assert ratios[-1] < 1.001


class TestAgainstOracle:
    @pytest.mark.parametrize("n,d", [(6, 1), (7, 2), (12, 4), (36, 14), (61, 13)])
    def test_sorted_spectra_match(self, n, d):
        lam = np.sort(circuit_power_spectrum(CircuitPower(n, d)))
        num = symmetric_eigenvalues(adjacency(CircuitPower(n, d)))
        assert np.max(np.abs(lam - num)) < 1e-7
