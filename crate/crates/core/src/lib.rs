//! Information-theoretic distances between quantum states.
//!
//! The crate computes fidelity, the Bures metric, the quantum Kullback-Leibler
//! divergence and the nonadditive quantum q-divergence (Tsallis relative
//! entropy) for dense density matrices, with an emphasis on comparing mixed
//! states against pure reference states, where the KL divergence is infinite
//! but the q-divergence (`0 < q < 1`) stays finite.
//!
//! ```
//! use qdiv::measures::{q_divergence, EntropicIndex};
//! use qdiv::states::{bell_state, projector, werner_state, BellState, WernerParameter};
//!
//! let rho = werner_state(WernerParameter::new(0.7).unwrap());
//! let sigma = projector(&bell_state(BellState::PsiMinus));
//! let k = q_divergence(&rho, &sigma, EntropicIndex::new(0.5).unwrap()).unwrap();
//! assert!((k - (1.0 - 0.7f64.sqrt()) / 0.5).abs() < 1e-10);
//! ```

pub mod cli;
pub mod error;
pub mod measures;
pub mod spectral;
pub mod states;

pub use error::{Error, Result};
pub use num_complex::Complex64;
