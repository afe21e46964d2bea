import math

import numpy as np
import pytest

from unruhchan import (
    ChannelParams,
    DensityMatrix,
    ModeLayout,
    NumericError,
    Receiver,
    RindlerParams,
    UnruhWeights,
    build_classical_ensemble,
    build_quantum_state,
    channel_report,
    coherent_information,
    conditional_entropy,
    holevo,
    measure_value,
    von_neumann_entropy,
)
from unruhchan.measures import binary_entropy, conditional_entropy_routes


def params(r, qr, alpha2, rail, kind, cutoff="auto", tol=1e-8):
    return ChannelParams(RindlerParams(r), UnruhWeights(qr), alpha2, rail, kind, cutoff, tol)


def sma_holevo_series_oracle(t, alpha2=0.5, receiver=Receiver.ROB, terms=6000):
    """Analytic diagonal spectra of the SMA single-rail ensemble.

    Vacuum branch is thermal, (1-t^2) t^(2n) at level n; excitation branch
    carries (n+1)(1-t^2)^2 t^(2n) one level up (Rob) or at level n
    (anti-Rob).  Everything is diagonal, so the Holevo quantity is a plain
    scalar series, summable to machine precision.
    """
    n = np.arange(terms)
    s0 = (1 - t * t) * t ** (2 * n)
    s1 = (n + 1) * (1 - t * t) ** 2 * t ** (2 * n)
    if receiver is Receiver.ROB:
        s1_lev = np.concatenate([[0.0], s1])[:terms]
    else:
        s1_lev = s1

    def shannon(p):
        p = p[p > 1e-300]
        return -np.sum(p * np.log2(p))

    mix = alpha2 * s0 + (1 - alpha2) * s1_lev
    return shannon(mix) - alpha2 * shannon(s0) - (1 - alpha2) * shannon(s1)


class TestVonNeumannEntropy:
    def dm(self, entries):
        layout = ModeLayout((len(entries),), ("m",))
        return DensityMatrix(layout, np.diag(entries).astype(complex))

    def test_pure(self):
        assert von_neumann_entropy(self.dm([1.0, 0.0])) == 0.0

    def test_maximally_mixed_qubit(self):
        assert von_neumann_entropy(self.dm([0.5, 0.5])) == pytest.approx(1.0, abs=1e-12)

    def test_skewed(self):
        assert von_neumann_entropy(self.dm([0.75, 0.25])) == pytest.approx(
            0.8112781244591328, abs=1e-9
        )

    def test_trace_check(self):
        with pytest.raises(NumericError):
            von_neumann_entropy(self.dm([0.7, 0.7]))


class TestHolevo:
    def test_orthogonal_outputs(self):
        ens = build_classical_ensemble(params(0.0, 1.0, 0.5, "single", "classical"))
        assert holevo(ens, Receiver.ROB) == pytest.approx(1.0, abs=1e-12)

    def test_identical_outputs(self):
        # anti-Rob sees the vacuum in both branches at r = 0
        ens = build_classical_ensemble(params(0.0, 1.0, 0.5, "single", "classical"))
        assert holevo(ens, Receiver.ANTIROB) == pytest.approx(0.0, abs=1e-12)

    # frozen from sma_holevo_series_oracle, which is independent of the
    # matrix pipeline (diagonal series summed to machine precision)
    @pytest.mark.parametrize(
        "t,expected",
        [
            (0.25, 0.829373554570),
            (0.5, 0.561094025547),
            (0.75, 0.318520468812),
        ],
    )
    def test_series_oracle_agreement(self, t, expected):
        oracle = sma_holevo_series_oracle(t)
        assert oracle == pytest.approx(expected, abs=1e-9)
        r = math.atanh(t)
        pipeline = measure_value("holevo", "single", Receiver.ROB, r, 1.0, 0.5, "auto", 1e-10)
        assert pipeline == pytest.approx(oracle, abs=1e-8)

    @pytest.mark.parametrize("alpha2", [0.1, 0.3, 0.5, 0.8])
    @pytest.mark.parametrize("qr", [1 / math.sqrt(2), 0.85, 1.0])
    def test_bounds(self, alpha2, qr):
        ens = build_classical_ensemble(params(0.9, qr, alpha2, "single", "classical", cutoff=40))
        for recv in Receiver:
            chi = holevo(ens, recv)
            assert chi >= -1e-10
            assert chi <= binary_entropy(alpha2) + 1e-10


class TestConditionalEntropy:
    def test_noiseless_rob(self):
        state, _, _ = build_quantum_state(params(0.0, 1.0, 0.5, "single", "quantum"))
        assert conditional_entropy(state, Receiver.ROB) == pytest.approx(-1.0, abs=1e-12)

    def test_noiseless_antirob(self):
        state, _, _ = build_quantum_state(params(0.0, 1.0, 0.5, "single", "quantum"))
        assert conditional_entropy(state, Receiver.ANTIROB) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("r", [0.3, 1.0])
    @pytest.mark.parametrize("rail", ["single", "dual"])
    def test_symmetric_weights_zero(self, r, rail):
        state, _, _ = build_quantum_state(
            params(r, 1 / math.sqrt(2), 0.5, rail, "quantum", cutoff=14)
        )
        for recv in Receiver:
            assert conditional_entropy(state, recv) == pytest.approx(0.0, abs=1e-9)

    @pytest.mark.parametrize("rail,cutoff", [("single", 30), ("dual", 10)])
    def test_routes_agree(self, rail, cutoff):
        state, _, _ = build_quantum_state(params(1.1, 0.9, 0.4, rail, "quantum", cutoff=cutoff))
        for recv in Receiver:
            direct, shortcut = conditional_entropy_routes(state, recv)
            assert direct == pytest.approx(shortcut, abs=1e-8)

    def test_coherent_is_negated_conditional(self):
        state, _, _ = build_quantum_state(params(0.8, 0.95, 0.5, "single", "quantum", cutoff=24))
        for recv in Receiver:
            assert coherent_information(state, recv) == pytest.approx(
                -conditional_entropy(state, recv), abs=0
            )

    @pytest.mark.parametrize("r,qr,alpha2", [(0.4, 1.0, 0.5), (1.2, 0.8, 0.3), (0.9, 0.75, 0.6)])
    def test_zero_sum_saturation(self, r, qr, alpha2):
        state, _, _ = build_quantum_state(params(r, qr, alpha2, "single", "quantum", cutoff=30))
        total = coherent_information(state, Receiver.ROB) + coherent_information(
            state, Receiver.ANTIROB
        )
        assert total == pytest.approx(0.0, abs=1e-9)


class TestChannelReport:
    def test_noiseless_point(self):
        rep = channel_report(params(0.0, 1.0, 0.5, "single", "quantum"))
        assert rep.holevo_r == pytest.approx(1.0, abs=1e-12)
        assert rep.holevo_rbar == pytest.approx(0.0, abs=1e-12)
        assert rep.cohinfo_r == pytest.approx(1.0, abs=1e-12)
        assert rep.cohinfo_rbar == pytest.approx(-1.0, abs=1e-12)

    @pytest.mark.parametrize("r", [0.5, 1.3])
    def test_symmetric_weights(self, r):
        rep = channel_report(params(r, 1 / math.sqrt(2), 0.5, "single", "quantum", cutoff=40))
        assert rep.holevo_r == pytest.approx(rep.holevo_rbar, abs=1e-10)
        assert rep.cohinfo_r == pytest.approx(0.0, abs=1e-9)
        assert rep.cohinfo_rbar == pytest.approx(0.0, abs=1e-9)

    def test_golden_point_from_convergence_oracle(self):
        # frozen after checking N=32, 64 and 96 agree to 1e-10
        rep = channel_report(params(1.0, 1.0, 0.5, "single", "quantum", cutoff=64))
        assert rep.holevo_r == pytest.approx(0.308845439427, abs=1e-9)
        assert rep.holevo_rbar == pytest.approx(0.079312394671, abs=1e-9)
        assert rep.cohinfo_r == pytest.approx(0.229533044756, abs=1e-9)
        assert rep.cohinfo_rbar == pytest.approx(-0.229533044756, abs=1e-9)

    @pytest.mark.parametrize("rail,cutoff", [("single", 24), ("dual", 10)])
    def test_receiver_swap_symmetry(self, rail, cutoff):
        qr = 0.88
        fwd = channel_report(params(1.0, qr, 0.5, rail, "quantum", cutoff=cutoff))
        swp = channel_report(
            params(1.0, UnruhWeights(qr).qL, 0.5, rail, "quantum", cutoff=cutoff)
        )
        assert fwd.holevo_r == pytest.approx(swp.holevo_rbar, abs=1e-10)
        assert fwd.holevo_rbar == pytest.approx(swp.holevo_r, abs=1e-10)
        assert fwd.cohinfo_r == pytest.approx(swp.cohinfo_rbar, abs=1e-10)
        assert fwd.cohinfo_rbar == pytest.approx(swp.cohinfo_r, abs=1e-10)

    def test_monogamy_sign_rule(self):
        for qr in (0.75, 0.9, 1.0):
            rep = channel_report(params(0.8, qr, 0.5, "single", "quantum", cutoff=24))
            if abs(rep.cohinfo_r) > 1e-9:
                assert np.sign(rep.cohinfo_r) == -np.sign(rep.cohinfo_rbar)

    def test_infinite_acceleration_convergence(self):
        diffs = []
        for r in (1.5, 2.0, 2.5, 3.0):
            ens = build_classical_ensemble(params(r, 1.0, 0.5, "single", "classical", cutoff=64))
            diffs.append(abs(holevo(ens, Receiver.ROB) - holevo(ens, Receiver.ANTIROB)))
        assert all(a > b for a, b in zip(diffs, diffs[1:]))

    def test_dual_dominates_single(self):
        for r in (0.3, 0.9, 1.5, 2.1):
            single = measure_value("coherent", "single", Receiver.ROB, r, 1.0, 0.5, 14)
            dual = measure_value("coherent", "dual", Receiver.ROB, r, 1.0, 0.5, 14)
            assert dual >= single - 1e-12

    def test_cutoff_stability(self):
        # every reported value moves by < 1e-6 when N -> N+8
        for rail, r, n in (("single", 0.8, 24), ("dual", 0.6, 14)):
            a = channel_report(params(r, 0.9, 0.5, rail, "quantum", cutoff=n))
            b = channel_report(params(r, 0.9, 0.5, rail, "quantum", cutoff=n + 8))
            for field in ("holevo_r", "holevo_rbar", "cohinfo_r", "cohinfo_rbar"):
                assert getattr(a, field) == pytest.approx(getattr(b, field), abs=1e-6)
