"""CHSH correlations of a fermion singlet seen by relativistically moving detectors.

Thin Python surface over the C++ engine; see ``relbell._core`` for the full
set of bindings.
"""

from ._core import (
    ChshSetting,
    ConvergenceError,
    DecoherenceFactor,
    Direction,
    FourMomentum,
    McConfig,
    McEstimate,
    NotReachableError,
    PacketSpec,
    QuadratureConfig,
    SampleEstimate,
    Side,
    Spin,
    ThresholdResult,
    apply_boost,
    chsh_bound_check,
    chsh_constrained,
    chsh_smallwidth,
    chsh_value,
    decoherence_factor,
    decoherence_factor_smallwidth,
    decoherence_factor_ultra,
    decoherence_integrand,
    gaussian_amplitude,
    mc_decoherence_factor,
    pair_expectation,
    rapidity_from_velocity,
    rapidity_sweep,
    reduced_density_matrix,
    sample_outcomes,
    singlet_amplitude,
    spinor_coefficients,
    threshold_rapidity,
    threshold_width,
    velocity_from,
    violation_threshold_v,
    width_sweep,
    wigner_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
