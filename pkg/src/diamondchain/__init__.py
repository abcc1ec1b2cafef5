"""Exact thermal correlations and teleportation for an Ising-XXZ diamond chain
with one distorted plaquette, solved with the transfer-matrix method."""

from .correlations import coherence_l1, concurrence_general, concurrence_x
from .density import (
    DimerDensity,
    density_from_spectra,
    host_density,
    impurity_density,
    impurity_density_finite,
    unnormalized_block_operator,
)
from .spectra import (
    ISING_PAIRS,
    BlockSpectrum,
    ChainParams,
    IsingPair,
    all_spectra,
    build_host_block,
    build_impurity_block,
    eval_host_energies,
    eval_impurity_energies,
)
from .teleport import (
    CLASSICAL_FIDELITY,
    InputState,
    OutputState,
    average_fidelity,
    bell_probabilities,
    concurrence_out,
    concurrence_out_imbalance,
    fidelity,
    output_state,
)
from .transfer import (
    ThermoConvergence,
    TransferData,
    boltzmann_weights,
    check_thermo_limit,
    convergence_gaps,
    partition_function_finite,
    transfer_data_from_weights,
    weights_from_spectra,
)

__version__ = "0.1.0"

__all__ = [
    "BlockSpectrum",
    "CLASSICAL_FIDELITY",
    "ChainParams",
    "DimerDensity",
    "ISING_PAIRS",
    "InputState",
    "IsingPair",
    "OutputState",
    "ThermoConvergence",
    "TransferData",
    "all_spectra",
    "average_fidelity",
    "bell_probabilities",
    "boltzmann_weights",
    "build_host_block",
    "build_impurity_block",
    "check_thermo_limit",
    "coherence_l1",
    "concurrence_general",
    "concurrence_out",
    "concurrence_out_imbalance",
    "concurrence_x",
    "convergence_gaps",
    "density_from_spectra",
    "eval_host_energies",
    "eval_impurity_energies",
    "fidelity",
    "host_density",
    "impurity_density",
    "impurity_density_finite",
    "output_state",
    "partition_function_finite",
    "transfer_data_from_weights",
    "unnormalized_block_operator",
    "weights_from_spectra",
]
