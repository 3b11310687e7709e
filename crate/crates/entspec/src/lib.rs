//! Entanglement spectra of random bipartite pure states at fixed Renyi
//! entropy.
//!
//! For a bipartition of dimension N x N' (N <= N'), conditioning the Renyi
//! entropy S_q to a deficit `u = ln N - S_q` below its typical value pushes
//! the reduced density matrix through three phases as u grows: an entangled
//! phase whose eigenvalue density is supported away from zero, a typical
//! phase whose density touches zero, and a separable phase in which a
//! single eigenvalue of order one evaporates above a sea of order 1/N.
//!
//! The crate provides:
//!
//! * [`special`]: the finite-Hilbert transform pair (h, g) of shifted power
//!   laws on [-1, 1], the engine behind every density here.
//! * [`critical`]: closed forms for the phase boundaries u_c(q), u_e(q) and
//!   the constants of the critical line.
//! * [`phase`]: phase classification and the three continuum solvers,
//!   returning supports, density coefficients, and Lagrange multipliers.
//! * [`spectrum`]: pointwise densities, moments, cumulative distributions,
//!   and exportable grids for a solved phase point.
//! * [`oracle`]: finite-N checks; a deterministic saddle-point solver and a
//!   Metropolis sampler for the conditioned eigenvalue ensemble.
//! * [`haar`]: exact-diagonalization sampling of unconditioned random
//!   states, the N -> infinity baseline.

pub mod critical;
mod error;
pub mod haar;
mod linalg;
pub mod oracle;
pub mod phase;
mod rng;
mod roots;
pub mod special;
pub mod spectrum;

pub use error::{Error, Result};

// Compile and run every Rust snippet in the guide as a doc-test, so the
// book cannot drift from the code it documents.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/phase-diagram.md")]
    pub struct PhaseDiagram;
    #[doc = include_str!("../../../book/src/spectra.md")]
    pub struct Spectra;
    #[doc = include_str!("../../../book/src/kernel-method.md")]
    pub struct KernelMethod;
    #[doc = include_str!("../../../book/src/finite-n-validation.md")]
    pub struct FiniteNValidation;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
    #[doc = include_str!("../../../book/src/reproducibility.md")]
    pub struct Reproducibility;
}
