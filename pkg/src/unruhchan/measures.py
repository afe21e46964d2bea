"""Entropic information measures for the two receiver bipartitions.

All entropies are in bits.  The receiver "rob" sees the region-I modes,
"antirob" the region-II modes; the sender's qubit is mode "A".
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import NumericError
from .fock import DensityMatrix, StateVector, hermitian_spectrum, reduce_from_vector
from .states import (
    ANTIROB_REGION,
    ROB_REGION,
    ChannelParams,
    ClassicalEnsemble,
    build_classical_ensemble,
    build_quantum_state,
)

SPECTRUM_FLOOR = 1e-14
CROSSCHECK_TOL = 1e-6


class Receiver(enum.Enum):
    ROB = "rob"
    ANTIROB = "antirob"

    @property
    def region(self) -> frozenset:
        return frozenset(ROB_REGION if self is Receiver.ROB else ANTIROB_REGION)

    @property
    def other(self) -> "Receiver":
        return Receiver.ANTIROB if self is Receiver.ROB else Receiver.ROB


def _region_labels(layout, region) -> tuple[str, ...]:
    labels = tuple(lab for lab in layout.labels if lab in region)
    if not labels:
        raise NumericError("state layout has no modes for the requested receiver")
    return labels


@dataclass
class InfoResult:
    """All four measures (plus conditional entropies) at one parameter point."""

    holevo_r: float
    holevo_rbar: float
    cohinfo_r: float
    cohinfo_rbar: float
    cond_r: float
    cond_rbar: float
    deficit: float
    cutoff: int

    def holevo(self, receiver: Receiver) -> float:
        return self.holevo_r if receiver is Receiver.ROB else self.holevo_rbar

    def cohinfo(self, receiver: Receiver) -> float:
        return self.cohinfo_r if receiver is Receiver.ROB else self.cohinfo_rbar


def entropy_of_spectrum(spectrum) -> float:
    """-sum(p log2 p) over entries above the 1e-14 floor."""
    lam = np.asarray(spectrum, dtype=float)
    lam = lam[lam > SPECTRUM_FLOOR]
    if lam.size == 0:
        return 0.0
    return float(-np.sum(lam * np.log2(lam)))


def von_neumann_entropy(rho: DensityMatrix, trace_tol: float = 1e-6) -> float:
    """Von Neumann entropy of a density matrix, in bits."""
    spectrum = hermitian_spectrum(rho)
    total = float(np.sum(spectrum))
    if abs(total - 1.0) > trace_tol:
        raise NumericError(f"density matrix trace {total:.9f} deviates from 1")
    return entropy_of_spectrum(spectrum)


def binary_entropy(p: float) -> float:
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1 - p) * math.log2(1 - p)


def holevo(ensemble: ClassicalEnsemble, receiver: Receiver) -> float:
    """Holevo information of the ensemble as seen by one receiver.

    chi = S(sum_x p_x sigma_x) - sum_x p_x S(sigma_x), with each sigma_x
    the branch state reduced to the receiver's region.
    """
    layout = ensemble.branches[0][1].layout
    keep = _region_labels(layout, receiver.region)
    mix = None
    mean_branch_entropy = 0.0
    for p, branch in ensemble.branches:
        rho = reduce_from_vector(branch, keep)
        mean_branch_entropy += p * von_neumann_entropy(rho)
        mix = p * rho.elements if mix is None else mix + p * rho.elements
    mixed = DensityMatrix(rho.layout, mix)
    return von_neumann_entropy(mixed) - mean_branch_entropy


def conditional_entropy_routes(state: StateVector, receiver: Receiver) -> tuple[float, float]:
    """(direct, pure-state shortcut) values of S(A|receiver).

    Direct: S(rho_{A,recv}) - S(rho_recv).  Shortcut: by global purity,
    S(rho_{A,recv}) equals the entropy of the complementary region, so the
    same quantity is S(rho_other) - S(rho_recv).
    """
    keep_recv = _region_labels(state.layout, receiver.region)
    keep_other = _region_labels(state.layout, receiver.other.region)
    s_joint = von_neumann_entropy(reduce_from_vector(state, ("A",) + keep_recv))
    s_recv = von_neumann_entropy(reduce_from_vector(state, keep_recv))
    s_other = von_neumann_entropy(reduce_from_vector(state, keep_other))
    return s_joint - s_recv, s_other - s_recv


def conditional_entropy(state: StateVector, receiver: Receiver) -> float:
    """S(A|receiver) in bits, cross-checked against the purity shortcut."""
    direct, shortcut = conditional_entropy_routes(state, receiver)
    if abs(direct - shortcut) > CROSSCHECK_TOL:
        raise NumericError(
            f"conditional-entropy routes disagree by {abs(direct - shortcut):.3e}; "
            f"cutoff is likely insufficient"
        )
    return direct


def coherent_information(state: StateVector, receiver: Receiver) -> float:
    """Entanglement yield of state merging: the negated conditional entropy."""
    return -conditional_entropy(state, receiver)


def channel_report(params: ChannelParams) -> InfoResult:
    """Evaluate all measures at one (r, qR, alpha2) point, shared cutoff.

    Builds the classical ensemble and the entangled state at the same
    cutoff regardless of params.kind.
    """
    n = params.resolve_cutoff()
    cparams = ChannelParams(
        params.rindler, params.weights, params.alpha2, params.rail, "classical", n, params.tol
    )
    qparams = ChannelParams(
        params.rindler, params.weights, params.alpha2, params.rail, "quantum", n, params.tol
    )
    ensemble = build_classical_ensemble(cparams)
    state, q_deficit, _ = build_quantum_state(qparams)
    cond_r = conditional_entropy(state, Receiver.ROB)
    cond_rbar = conditional_entropy(state, Receiver.ANTIROB)
    return InfoResult(
        holevo_r=holevo(ensemble, Receiver.ROB),
        holevo_rbar=holevo(ensemble, Receiver.ANTIROB),
        cohinfo_r=-cond_r,
        cohinfo_rbar=-cond_rbar,
        cond_r=cond_r,
        cond_rbar=cond_rbar,
        deficit=max(ensemble.deficit, q_deficit),
        cutoff=n,
    )
