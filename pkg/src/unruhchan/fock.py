"""Tensor algebra on a composite truncated Fock space.

States live in a product of bosonic modes, each cut off at a finite
occupation number.  Everything here is a pure function on small dense
numpy arrays: flat-index bookkeeping, ladder operators with explicit
cutoff spill, partial traces taken directly from state vectors, and
Hermitian spectra.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericError, UsageError

HERMITICITY_TOL = 1e-12
EIGENVALUE_CLAMP = -1e-10


@dataclass(frozen=True)
class ModeLayout:
    """Ordered collection of modes with per-mode dimensions.

    ``dims[k]`` is the local dimension of mode ``labels[k]`` (cutoff N gives
    dimension N+1).  Flat indices are row-major in this order.
    """

    dims: tuple[int, ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.dims) != len(self.labels):
            raise UsageError("dims and labels must have equal length")
        if any(d < 1 for d in self.dims):
            raise UsageError("every mode dimension must be >= 1")
        if len(set(self.labels)) != len(self.labels):
            raise UsageError("mode labels must be unique")

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    def axis(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UsageError(f"unknown mode label {label!r}") from None

    def sublayout(self, keep: tuple[str, ...]) -> "ModeLayout":
        axes = [self.axis(lab) for lab in keep]
        return ModeLayout(tuple(self.dims[a] for a in axes), tuple(keep))


@dataclass
class StateVector:
    """Complex amplitudes over the flat composite basis of ``layout``."""

    layout: ModeLayout
    amps: np.ndarray

    def __post_init__(self):
        self.amps = np.asarray(self.amps, dtype=complex).reshape(-1)
        if self.amps.size != self.layout.total_dim:
            raise UsageError("amplitude length does not match layout dimension")

    def norm2(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def tensor(self) -> np.ndarray:
        return self.amps.reshape(self.layout.dims)


@dataclass
class DensityMatrix:
    """Hermitian PSD matrix over the flat basis of ``layout``."""

    layout: ModeLayout
    elements: np.ndarray

    def __post_init__(self):
        self.elements = np.asarray(self.elements, dtype=complex)
        n = self.layout.total_dim
        if self.elements.shape != (n, n):
            raise UsageError("density matrix shape does not match layout")

    def trace(self) -> float:
        return float(np.trace(self.elements).real)


def encode_index(occupations, layout: ModeLayout) -> int:
    """Row-major flat index of an occupation tuple."""
    occ = tuple(int(n) for n in occupations)
    if len(occ) != len(layout.dims):
        raise IndexError("occupation tuple length does not match layout")
    for n, d in zip(occ, layout.dims):
        if n < 0 or n >= d:
            raise IndexError(f"occupation {n} out of range for dimension {d}")
    return int(np.ravel_multi_index(occ, layout.dims))


def decode_index(index: int, layout: ModeLayout) -> tuple[int, ...]:
    """Inverse of :func:`encode_index`."""
    if index < 0 or index >= layout.total_dim:
        raise IndexError(f"flat index {index} out of range")
    return tuple(int(n) for n in np.unravel_index(index, layout.dims))


def apply_creation(state: StateVector, mode: str) -> tuple[StateVector, float]:
    """Apply a^dagger on ``mode``; amplitudes pushed past the cutoff are dropped.

    Returns the new state and the squared weight spilled over the cutoff.
    """
    ax = state.layout.axis(mode)
    psi = state.tensor()
    out = np.zeros_like(psi)
    d = state.layout.dims[ax]
    src = np.moveaxis(psi, ax, 0)
    dst = np.moveaxis(out, ax, 0)
    factors = np.sqrt(np.arange(1, d)).reshape((d - 1,) + (1,) * (psi.ndim - 1))
    dst[1:] = factors * src[: d - 1]
    spill = float(np.sum(np.abs(src[d - 1]) ** 2))
    return StateVector(state.layout, out.reshape(-1)), spill


def apply_annihilation(state: StateVector, mode: str) -> StateVector:
    """Apply a on ``mode``; the vacuum component maps to zero."""
    ax = state.layout.axis(mode)
    psi = state.tensor()
    out = np.zeros_like(psi)
    d = state.layout.dims[ax]
    src = np.moveaxis(psi, ax, 0)
    dst = np.moveaxis(out, ax, 0)
    factors = np.sqrt(np.arange(1, d)).reshape((d - 1,) + (1,) * (psi.ndim - 1))
    dst[: d - 1] = factors * src[1:]
    return StateVector(state.layout, out.reshape(-1))


def reduce_from_vector(state: StateVector, keep) -> DensityMatrix:
    """Partial trace of |psi><psi| keeping only the listed modes.

    Works directly on the vector (never builds the composite density
    matrix): reshape to (kept, traced) and contract the traced axis.
    """
    keep = tuple(keep)
    if not keep:
        raise UsageError("keep-set must be nonempty")
    keep_axes = [state.layout.axis(lab) for lab in keep]
    traced_axes = [a for a in range(len(state.layout.dims)) if a not in keep_axes]
    psi = state.tensor().transpose(keep_axes + traced_axes)
    dk = int(np.prod([state.layout.dims[a] for a in keep_axes]))
    mat = psi.reshape(dk, -1)
    rho = mat @ mat.conj().T
    return DensityMatrix(state.layout.sublayout(keep), rho)


def hermitian_spectrum(rho, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, descending.

    Eigenvalues in [-1e-10, 0) are clamped to zero (roundoff negatives of
    density matrices); the clamp never changes the sum by more than 1e-10
    per eigenvalue.
    """
    mat = rho.elements if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    dev = np.max(np.abs(mat - mat.conj().T))
    if dev > tol:
        raise NumericError(f"matrix deviates from Hermiticity by {dev:.3e}")
    vals = np.linalg.eigvalsh(mat)
    vals = np.where((vals < 0) & (vals >= EIGENVALUE_CLAMP), 0.0, vals)
    return vals[::-1]
