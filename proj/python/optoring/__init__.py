"""Four-mode optomechanical ring simulator (python bindings)."""

from _optoring import (  # noqa: F401
    PolaritonSpectrum,
    SystemParams,
    allowed_region,
    critical_coupling,
    effective_cooperativity,
    effective_couplings,
    many_photon_coupling,
    mixing_angle,
    nonlinear_dos,
    nonlinearity_strength,
    omit_reflectivity,
    oracle_compare,
    polariton_frequencies,
    resonance_residual,
    resonant_gplus,
    solve_device,
    stability_check,
    two_mode_comparison,
    validate,
)

__version__ = "0.1.0"
