//! Exact Ehrhart polynomials and normalized volumes of hypersimplices,
//! panhandle matroids, stressed-hyperplane relaxations, paving matroids and
//! Steiner-system matroids, with brute-force oracles for cross-checking.

pub mod cli;
pub mod designs;
pub mod error;
pub mod exactmath;
pub mod ehrhart;
pub mod matroid;
pub mod oracle;
pub mod par;
pub mod positivity;
pub mod volume;

pub use error::{Error, Result};
