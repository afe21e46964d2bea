"""Information transfer from an inertial sender to counter-accelerating receivers.

Numerical toolkit for Holevo and coherent information over single- and
dual-rail Unruh-mode channels on a truncated Fock space, plus parameter
optimization and a CLI for sweeps and figures.
"""

from .errors import (
    BracketError,
    NumericError,
    TruncationError,
    UnruhChanError,
    UsageError,
)
from .fock import (
    DensityMatrix,
    ModeLayout,
    StateVector,
    apply_annihilation,
    apply_creation,
    decode_index,
    encode_index,
    hermitian_spectrum,
    reduce_from_vector,
)
from .measures import (
    InfoResult,
    Receiver,
    channel_report,
    coherent_information,
    conditional_entropy,
    holevo,
    von_neumann_entropy,
)
from .optimize import OptResult, maximize, measure_value, optimal_curve, sma_crossover
from .states import (
    ChannelParams,
    ClassicalEnsemble,
    RindlerParams,
    UnruhWeights,
    auto_cutoff,
    build_classical_ensemble,
    build_quantum_state,
    squeezing_parameter,
    unruh_excitation,
    unruh_vacuum,
)

__all__ = [
    "BracketError",
    "ChannelParams",
    "ClassicalEnsemble",
    "DensityMatrix",
    "InfoResult",
    "ModeLayout",
    "NumericError",
    "OptResult",
    "Receiver",
    "RindlerParams",
    "StateVector",
    "TruncationError",
    "UnruhChanError",
    "UnruhWeights",
    "UsageError",
    "apply_annihilation",
    "apply_creation",
    "auto_cutoff",
    "build_classical_ensemble",
    "build_quantum_state",
    "channel_report",
    "coherent_information",
    "conditional_entropy",
    "decode_index",
    "encode_index",
    "hermitian_spectrum",
    "holevo",
    "maximize",
    "measure_value",
    "optimal_curve",
    "reduce_from_vector",
    "sma_crossover",
    "squeezing_parameter",
    "unruh_excitation",
    "unruh_vacuum",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
