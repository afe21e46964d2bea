import math

import numpy as np
import pytest

from unruhchan import (
    BracketError,
    Receiver,
    maximize,
    measure_value,
    optimal_curve,
    sma_crossover,
)
from unruhchan.states import Q_MIN


class TestMaximize:
    @pytest.mark.parametrize("r", [0.2, 0.6, 1.0, 1.4])
    def test_coherent_single_rail_sma_optimal(self, r):
        res = maximize("coherent", "single", Receiver.ROB, r, cutoff=40)
        assert res.qr_opt == pytest.approx(1.0, abs=1e-3)

    @pytest.mark.parametrize("r", [0.2, 1.0])
    def test_coherent_dual_rail_balanced_and_sma(self, r):
        res = maximize("coherent", "dual", Receiver.ROB, r, cutoff=10)
        assert res.qr_opt == pytest.approx(1.0, abs=1e-3)
        assert res.alpha2_opt == pytest.approx(0.5, abs=1e-3)

    def test_holevo_low_squeezing_sma_optimal(self):
        res = maximize("holevo", "single", Receiver.ROB, 0.5, cutoff=48)
        assert res.qr_opt == pytest.approx(1.0, abs=1e-3)

    def test_anchor_dominance(self):
        for r in (0.4, 1.2):
            res = maximize("holevo", "single", Receiver.ROB, r, cutoff=48)
            for anchor in ((0.5, 1.0), (0.5, Q_MIN)):
                v = measure_value("holevo", "single", Receiver.ROB, r, anchor[1], anchor[0], 48)
                assert res.value >= v - 1e-10

    def test_deterministic(self):
        a = maximize("holevo", "single", Receiver.ROB, 0.9, cutoff=32)
        b = maximize("holevo", "single", Receiver.ROB, 0.9, cutoff=32)
        assert (a.alpha2_opt, a.qr_opt, a.value, a.evals) == (
            b.alpha2_opt,
            b.qr_opt,
            b.value,
            b.evals,
        )

    @pytest.mark.parametrize("r", [0.3, 1.0, 2.0])
    def test_matches_dense_grid_oracle(self, r):
        # brute-force 201 x 101 scan; branch reductions are alpha2-free, so
        # only the mixture entropy is redone per alpha2
        n = 64
        from unruhchan import (
            ChannelParams,
            RindlerParams,
            UnruhWeights,
            build_classical_ensemble,
            hermitian_spectrum,
            reduce_from_vector,
        )
        from unruhchan.measures import entropy_of_spectrum

        best = -math.inf
        for qr in np.linspace(Q_MIN, 1.0, 101):
            params = ChannelParams(
                RindlerParams(r), UnruhWeights(float(qr)), 0.5, "single", "classical", n, 1e-8
            )
            ens = build_classical_ensemble(params)
            rhos = [reduce_from_vector(b, ("I",)).elements for _, b in ens.branches]
            entropies = [entropy_of_spectrum(hermitian_spectrum(m)) for m in rhos]
            for a2 in np.linspace(0.0, 1.0, 201):
                mix = a2 * rhos[0] + (1 - a2) * rhos[1]
                chi = (
                    entropy_of_spectrum(hermitian_spectrum(mix))
                    - a2 * entropies[0]
                    - (1 - a2) * entropies[1]
                )
                best = max(best, chi)
        res = maximize("holevo", "single", Receiver.ROB, r, cutoff=n)
        assert res.value == pytest.approx(best, abs=1e-4)
        assert res.value >= best - 1e-10

    def test_optimum_qr_near_symmetric_point_at_large_squeezing(self):
        res = maximize("holevo", "single", Receiver.ROB, 3.0, cutoff=96)
        assert res.qr_opt == pytest.approx(Q_MIN, abs=5e-2)


class TestSmaCrossover:
    def test_single_rail_bracket(self):
        r_star = sma_crossover("single", cutoff=64)
        assert 0.8 <= r_star <= 1.3

    def test_indicator_monotone_above_crossover(self):
        # once qR_opt leaves 1 it stays away on a dense-ish scan
        r_star = sma_crossover("single", cutoff=48)
        qr_opts = [
            maximize("holevo", "single", Receiver.ROB, r, cutoff=48).qr_opt
            for r in np.arange(r_star + 0.05, 2.0, 0.2)
        ]
        assert all(q < 1 - 1e-3 for q in qr_opts)

    def test_bad_bracket(self):
        with pytest.raises(BracketError):
            sma_crossover("single", r_lo=0.1, r_hi=0.3, cutoff=32)


class TestOptimalCurve:
    def test_holevo_curve_non_increasing(self):
        curve = optimal_curve("holevo", "single", np.linspace(0.0, 2.0, 9), cutoff=64)
        vals = [res.value for res in curve]
        assert all(a >= b - 1e-9 for a, b in zip(vals, vals[1:]))

    def test_alpha2_near_half_and_varying_above_crossover(self):
        curve = optimal_curve("holevo", "single", np.linspace(1.2, 2.0, 5), cutoff=64)
        a2 = [res.alpha2_opt for res in curve]
        assert all(abs(v - 0.5) < 0.12 for v in a2)
        assert max(a2) - min(a2) > 1e-4

    def test_dual_dominates_single(self):
        grid = np.linspace(0.2, 1.4, 4)
        single = optimal_curve("holevo", "single", grid, cutoff=14)
        dual = optimal_curve("holevo", "dual", grid, cutoff=14)
        for s, d in zip(single, dual):
            assert d.value >= s.value - 1e-9
