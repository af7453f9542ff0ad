//! Quantum discord of two-qubit classical-quantum states and its creation by
//! local amplitude damping.
//!
//! A state ½(|0⟩⟨0| ⊗ |+⟩⟨+| + |1⟩⟨1| ⊗ |−⟩⟨−|) carries one bit of purely
//! classical correlation. Letting qubit B relax through an amplitude-damping
//! channel makes the two conditional states of B non-orthogonal, and discord
//! appears without any entanglement. This crate computes the relevant
//! quantities both in closed form and by brute-force measurement search.
//!
//! ```
//! use cq_discord::channels::{amplitude_damping, evolve_cq};
//! use cq_discord::correlations::discord_analytic;
//! use cq_discord::states::CqState;
//!
//! let rho0 = CqState::initial_classical();
//! let damped = evolve_cq(&rho0, &amplitude_damping(0.5).unwrap()).unwrap();
//! let d = discord_analytic(&damped.canonicalize()).unwrap();
//! assert!(d > 0.05);
//! ```

pub mod channels;
pub mod cli;
pub mod correlations;
pub mod error;
pub mod optimize;
pub mod qmat;
pub mod states;

pub use error::{Error, Result};
