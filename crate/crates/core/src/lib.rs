//! Exact computations with simplicial Lie algebras over ℚ: Moore complexes,
//! Peiffer pairings, and the graded Lie algebra with differential they carry.
//!
//! Everything here is `no_std` with `alloc`; IO and file formats live in the
//! companion `sdgla` crate.
#![no_std]

extern crate alloc;

pub mod combinatorics;
pub mod dgla;
pub mod error;
pub mod fixtures;
pub mod hypercrossed;
pub mod lie;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod simplicial;
pub mod subspace;
pub mod superfield;

pub use combinatorics::{MultiIndex, PeifferPair};
pub use error::AlgebraError;
pub use lie::LieAlgebra;
pub use matrix::{Matrix, Vector};
pub use report::{Report, Violation};
pub use scalar::Q;
pub use subspace::Subspace;
