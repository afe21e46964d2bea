"""Channel input states in the Rindler basis.

The sender excites a single Unruh mode; the two accelerated receivers see
it through the two-mode-squeezed structure of the Rindler vacuum.  This
module builds the four channel inputs (single/dual rail, classical
ensemble / entangled state) on a truncated Fock space with a certified
truncation deficit.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .errors import TruncationError, UsageError
from .fock import ModeLayout, StateVector

Q_MIN = 1.0 / math.sqrt(2.0)
DEFAULT_NMAX_CAP = 64
NMAX_CAP_ENV = "UNRUHCHAN_NMAX_CAP"

SINGLE_RAIL_LABELS = ("I", "II")
DUAL_RAIL_LABELS = ("I+", "II+", "I-", "II-")

ROB_REGION = {"I", "I+", "I-"}
ANTIROB_REGION = {"II", "II+", "II-"}


def squeezing_parameter(a: float, omega: float, c: float = 1.0) -> float:
    """Squeezing r from proper acceleration a, Rindler frequency omega.

    tanh(r) = exp(-pi * c * omega / a); r -> 0 at small acceleration and
    diverges as a -> infinity.
    """
    if a <= 0 or omega <= 0 or c <= 0:
        raise ValueError("a, omega and c must all be positive")
    return float(np.arctanh(np.exp(-np.pi * c * omega / a)))


@dataclass(frozen=True)
class RindlerParams:
    """Squeezing parameter of one Rindler frequency."""

    r: float

    def __post_init__(self):
        if not np.isfinite(self.r) or self.r < 0:
            raise ValueError("squeezing parameter must be finite and >= 0")

    @classmethod
    def from_acceleration(cls, a: float, omega: float, c: float = 1.0) -> "RindlerParams":
        return cls(squeezing_parameter(a, omega, c))


@dataclass(frozen=True)
class UnruhWeights:
    """Region weights (qR, qL) of the Unruh mode, qR^2 + qL^2 = 1.

    The type admits the full range qR in [0, 1] so that the exact
    Rob/anti-Rob swap symmetry (qR <-> qL) can be exercised directly;
    the qR >= qL convention is enforced where parameters enter from the
    outside (ChannelParams, CLI).
    """

    qR: float

    def __post_init__(self):
        if not 0.0 <= self.qR <= 1.0:
            raise ValueError("qR must lie in [0, 1]")

    @property
    def qL(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.qR**2))

    def swapped(self) -> "UnruhWeights":
        return UnruhWeights(self.qL)


@dataclass(frozen=True)
class ChannelParams:
    """One point of the study's parameter space."""

    rindler: RindlerParams
    weights: UnruhWeights
    alpha2: float
    rail: str = "single"
    kind: str = "quantum"
    cutoff: int | str = "auto"
    tol: float = 1e-8

    def __post_init__(self):
        if not 0.0 <= self.alpha2 <= 1.0:
            raise UsageError("alpha2 must lie in [0, 1]")
        if self.rail not in ("single", "dual"):
            raise UsageError("rail must be 'single' or 'dual'")
        if self.kind not in ("classical", "quantum"):
            raise UsageError("kind must be 'classical' or 'quantum'")
        if self.tol <= 0:
            raise UsageError("tol must be positive")
        if self.cutoff != "auto":
            if int(self.cutoff) < 2:
                raise UsageError("cutoff must be >= 2")
            object.__setattr__(self, "cutoff", int(self.cutoff))

    @property
    def r(self) -> float:
        return self.rindler.r

    def resolve_cutoff(self) -> int:
        if self.cutoff == "auto":
            return auto_cutoff(self.r, self.tol, self.rail)
        return int(self.cutoff)


@dataclass
class ClassicalEnsemble:
    """Probabilistic mixture of logical-0 / logical-1 Rindler states."""

    branches: list  # [(probability, StateVector), ...]
    labels: tuple[str, ...] = ("0", "1")
    deficit: float = 0.0
    cutoff: int = 0

    def __post_init__(self):
        probs = np.array([p for p, _ in self.branches], dtype=float)
        if np.any(probs < 0) or abs(probs.sum() - 1.0) > 1e-12:
            raise UsageError("branch probabilities must be >= 0 and sum to 1")


def nmax_cap() -> int:
    """Hard ceiling on the per-mode cutoff; env override for deep sweeps."""
    raw = os.environ.get(NMAX_CAP_ENV)
    return int(raw) if raw else DEFAULT_NMAX_CAP


def _vacuum_tail(t: float, n: int) -> float:
    # weight of the squeezed vacuum above level n
    return t ** (2 * (n + 1))


def _excitation_tail(t: float, n: int) -> float:
    # weight of the sqrt(n+1)-weighted excitation series with top ket above
    # level n: sum_{k>=n} (k+1) t^{2k} (1-t^2)^2
    x = t * t
    if x == 0.0:
        return 0.0
    return x**n * (n + 1 - n * x)


def auto_cutoff(r: float, tol: float, rail: str = "single") -> int:
    """Smallest per-mode cutoff N with both series tails below tol/4.

    Capped at 64 unless UNRUHCHAN_NMAX_CAP says otherwise; failing the cap
    is an explicit error rather than a silent clamp.
    """
    if tol <= 0:
        raise UsageError("tol must be positive")
    t = math.tanh(r)
    cap = nmax_cap()
    for n in range(2, cap + 1):
        if _vacuum_tail(t, n) < tol / 4 and _excitation_tail(t, n) < tol / 4:
            return n
    raise TruncationError(
        f"cutoff above the cap {cap} required for r={r:g}, tol={tol:g}; "
        f"pass a fixed N or relax tol"
    )


def unruh_vacuum(r: float, n_max: int, labels=("I", "II")) -> tuple[StateVector, float]:
    """Truncated two-mode-squeezed vacuum over one (I, II) Rindler pair.

    Amplitudes tanh(r)^n / cosh(r) on |n, n>.  Returned subnormalized; the
    reported deficit tanh(r)^(2(N+1)) is the exact truncated tail weight.
    """
    if n_max < 2:
        raise UsageError("n_max must be >= 2")
    t = math.tanh(r)
    layout = ModeLayout((n_max + 1, n_max + 1), tuple(labels))
    amps = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    ns = np.arange(n_max + 1)
    amps[ns, ns] = t**ns / math.cosh(r)
    return StateVector(layout, amps.reshape(-1)), _vacuum_tail(t, n_max)


def unruh_excitation(
    r: float, weights: UnruhWeights, n_max: int, labels=("I", "II")
) -> tuple[StateVector, float]:
    """Truncated one-particle Unruh excitation over one (I, II) pair.

    qR * sum_n sqrt(n+1) t^n / cosh^2 |n+1, n>  +  qL * (I <-> II mirror).
    The two branches are orthogonal; deficit = 1 - norm^2 of the result.
    """
    if n_max < 2:
        raise UsageError("n_max must be >= 2")
    t = math.tanh(r)
    ch2 = math.cosh(r) ** 2
    layout = ModeLayout((n_max + 1, n_max + 1), tuple(labels))
    amps = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    ns = np.arange(n_max)
    coeff = np.sqrt(ns + 1.0) * t**ns / ch2
    amps[ns + 1, ns] += weights.qR * coeff
    amps[ns, ns + 1] += weights.qL * coeff
    state = StateVector(layout, amps.reshape(-1))
    return state, max(0.0, 1.0 - state.norm2())


def _check_deficit(deficit: float, params: ChannelParams) -> None:
    if params.cutoff == "auto" and deficit > params.tol:
        raise TruncationError(
            f"truncation deficit {deficit:.3e} exceeds tol {params.tol:g} "
            f"at r={params.r:g}; increase N"
        )


def build_quantum_state(params: ChannelParams) -> tuple[StateVector, float, int]:
    """Global pure channel state over (A, Rindler modes), renormalized.

    Single rail: alpha |0>_A vacuum + beta |1>_A excitation over (A, I, II).
    Dual rail:  alpha |+>_A (excitation_+, vacuum_-) + beta |->_A
    (vacuum_+, excitation_-) over (A, I+, II+, I-, II-).

    Returns (state, pre-normalization deficit, cutoff used).
    """
    if params.kind != "quantum":
        raise UsageError("build_quantum_state requires kind='quantum'")
    n = params.resolve_cutoff()
    alpha = math.sqrt(params.alpha2)
    beta = math.sqrt(1.0 - params.alpha2)
    if params.rail == "single":
        vac, _ = unruh_vacuum(params.r, n)
        exc, _ = unruh_excitation(params.r, params.weights, n)
        layout = ModeLayout((2,) + vac.layout.dims, ("A",) + SINGLE_RAIL_LABELS)
        amps = np.stack([alpha * vac.tensor(), beta * exc.tensor()])
    else:
        vac_p, _ = unruh_vacuum(params.r, n, ("I+", "II+"))
        exc_p, _ = unruh_excitation(params.r, params.weights, n, ("I+", "II+"))
        vac_m, _ = unruh_vacuum(params.r, n, ("I-", "II-"))
        exc_m, _ = unruh_excitation(params.r, params.weights, n, ("I-", "II-"))
        layout = ModeLayout((2,) + (n + 1,) * 4, ("A",) + DUAL_RAIL_LABELS)
        branch0 = np.multiply.outer(exc_p.tensor(), vac_m.tensor())
        branch1 = np.multiply.outer(vac_p.tensor(), exc_m.tensor())
        amps = np.stack([alpha * branch0, beta * branch1])
    state = StateVector(layout, amps.reshape(-1))
    norm2 = state.norm2()
    deficit = max(0.0, 1.0 - norm2)
    _check_deficit(deficit, params)
    state.amps /= math.sqrt(norm2)
    return state, deficit, n


def build_classical_ensemble(params: ChannelParams) -> ClassicalEnsemble:
    """Two-branch ensemble of logical 0/1 over the Rindler modes.

    Branch states are renormalized after truncation; the ensemble deficit
    is the worst pre-normalization branch deficit.
    """
    if params.kind != "classical":
        raise UsageError("build_classical_ensemble requires kind='classical'")
    n = params.resolve_cutoff()
    if params.rail == "single":
        b0, d0 = unruh_vacuum(params.r, n)
        b1, d1 = unruh_excitation(params.r, params.weights, n)
    else:
        vac_p, _ = unruh_vacuum(params.r, n, ("I+", "II+"))
        exc_p, _ = unruh_excitation(params.r, params.weights, n, ("I+", "II+"))
        vac_m, _ = unruh_vacuum(params.r, n, ("I-", "II-"))
        exc_m, _ = unruh_excitation(params.r, params.weights, n, ("I-", "II-"))
        layout = ModeLayout((n + 1,) * 4, DUAL_RAIL_LABELS)
        b0 = StateVector(layout, np.multiply.outer(exc_p.tensor(), vac_m.tensor()).reshape(-1))
        b1 = StateVector(layout, np.multiply.outer(vac_p.tensor(), exc_m.tensor()).reshape(-1))
        d0 = max(0.0, 1.0 - b0.norm2())
        d1 = max(0.0, 1.0 - b1.norm2())
    deficit = max(0.0, d0, d1)
    _check_deficit(deficit, params)
    for b in (b0, b1):
        b.amps /= math.sqrt(b.norm2())
    branches = [(params.alpha2, b0), (1.0 - params.alpha2, b1)]
    return ClassicalEnsemble(branches=branches, deficit=deficit, cutoff=n)
