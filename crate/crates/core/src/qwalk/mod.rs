//! Discrete-time Fourier-coined quantum walk on the lower adjacency of
//! n-simplices.
//!
//! The walker lives on arcs `|σ_i → σ_j⟩` between lower-adjacent simplices.
//! One step applies the Fourier coin on the arcs leaving each simplex and
//! then reverses every arc.

mod operators;
mod space;
mod spectral;
mod transition;

pub use operators::{
    coin_operator, evolve, fourier_matrix, shift_operator, step_operator, ArcShift, FourierCoin,
    QuantumState, UnitaryWalk,
};
pub use space::{build_walk_space, WalkSpace};
pub use spectral::{
    amplitude_lower_bound, long_time_average_spectral, UnitarySpectrum, DEFAULT_PHASE_TOLERANCE,
};
pub use transition::{
    finite_time_average, transition_probability, transition_table_at, Estimator, TransitionTable,
    DEFAULT_TIME_STEPS,
};
