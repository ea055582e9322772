"""Driven Lambda system: phase-controlled gain and dispersion on the ac-Stark allowed transition."""

from ._acsa import (
    AcsaError,
    SystemParams,
    build_hamiltonian,
    build_liouvillian,
    coherence,
    dressed_states,
    evolve,
    find_peaks,
    generalized_rabi,
    map_phase_detuning,
    parse_config,
    preset_config,
    preset_ids,
    rho_ab_bare,
    rho_ab_dressed,
    rho_ab_weak,
    rho_ac_dressed,
    rho_ac_weak,
    spectrum,
    steady_state,
    sweep_detuning,
    validate_params,
)

__all__ = [
    "AcsaError",
    "SystemParams",
    "build_hamiltonian",
    "build_liouvillian",
    "coherence",
    "dressed_states",
    "evolve",
    "find_peaks",
    "generalized_rabi",
    "map_phase_detuning",
    "parse_config",
    "preset_config",
    "preset_ids",
    "rho_ab_bare",
    "rho_ab_dressed",
    "rho_ab_weak",
    "rho_ac_dressed",
    "rho_ac_weak",
    "spectrum",
    "steady_state",
    "sweep_detuning",
    "validate_params",
]
