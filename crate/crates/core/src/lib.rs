//! Exact dynamics of two qubits in independent lossy cavities, and the
//! entanglement left on the qubit pair after a Bell-state measurement on the
//! photons leaking out of the cavities.
//!
//! Every quantity is a function of two complex amplitudes per time: the
//! excited-state survival amplitude `𝓔(τ)` and the cavity-photon amplitude
//! `Γ(τ)` (see [`dynamics`]). On top of those sit single-qubit linear
//! entropy, the Bell-measurement projections ([`swap`]) and Haar averages
//! over initial states ([`averaging`]). [`oracle`] holds brute-force solvers
//! used only for verification.

pub mod averaging;
pub mod dynamics;
pub mod error;
pub mod haar;
pub mod oracle;
pub mod quadrature;
pub mod qubit;
pub mod swap;

pub use averaging::{
    average_linear_entropy, average_linear_entropy_estimate, entangling_power, entangling_power_estimate,
    linear_entropy_closed_form, AverageSpec, Estimate,
};
pub use dynamics::{
    correlation_kernel, gamma_amplitude, rate_constants, spectral_density, stationary_concurrence_limit,
    survival_amplitude, AmplitudePair, RateConstants, SystemParams,
};
pub use error::{Error, Result};
pub use qubit::{
    concurrence_pure, concurrence_wootters, linear_entropy, qubit_reduced_density, DensityMatrix2, DensityMatrix4,
    PureTwoQubitState, QubitInit,
};
pub use swap::{
    concurrence, concurrence_phi_plus, concurrence_psi_minus, maximal_entanglement_times, post_bsm_state, BellChannel,
    PairInit,
};

pub use num_complex::Complex64;
