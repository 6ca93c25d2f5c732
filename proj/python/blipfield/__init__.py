"""Four-channel 1D field lattice: localized blip states, dispersion-free
evolution, regularised field observables and boost covariance checks."""

from ._core import (
    Channel,
    ChannelAmplitude,
    ChannelFieldProfiles,
    Direction,
    EvolutionLaw,
    FieldComponent,
    FieldSnapshot,
    Lattice,
    PacketShape,
    PacketSpec,
    PhaseGauge,
    PhysicalConstants,
    Polarization,
    PositiveProjection,
    PreconditionError,
    Rep,
    SlopeFit,
    SpectraResult,
    StateKind,
    StateVector,
    TwoPathResult,
    __version__,
    advection_residual_rms,
    all_channels,
    apply_regularisation,
    blip_basis_proxy,
    boost_state,
    build_lattice,
    channel_field_profiles,
    covariance_two_path,
    doppler_factor,
    eigenvalue_hdyn,
    energy_expectation,
    evolve,
    exact_transport,
    field_expectation,
    field_route_energy,
    hdyn_expectation,
    inner_product,
    kernel_real_space,
    kernel_tail_slope,
    make_packet,
    norm,
    normalized,
    project_positive_wavenumbers,
    regularisation_symbol,
    rms_width,
    rr_composition_check,
    single_excitation_spectra,
    superpose,
    to_momentum,
    to_position,
    to_rep,
    zero_state,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
