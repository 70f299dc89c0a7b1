//! Exact modular data and fusion rules for the orbifold V_{L2}^{A4}.
//!
//! The crate is organised bottom-up:
//!
//! - [`cyclo`]: exact arithmetic in Q(ζ₇₂).
//! - [`lattice`]: modular data of rank-one lattice VOAs V_{Zγ}.
//! - [`catalog`]: the 21 irreducible modules and their coset decomposition.
//! - [`smatrix`]: the partially known 21×21 S-matrix and the printed
//!   appendix it is checked against.
//! - [`verlinde`]: exact Verlinde sums on the fully known index set.
//! - [`fusion`]: the closed-form fusion table and ring-axiom sweeps.
//! - [`errata`] and [`verify`]: the known-discrepancy ledger and the
//!   verification suites that consume it.

pub mod catalog;
pub mod cyclo;
pub mod errata;
pub mod fusion;
pub mod lattice;
mod linalg;
pub mod notation;
pub mod smatrix;
pub mod verify;
pub mod verlinde;

pub use catalog::{catalog, CatalogEntry, ModuleId, Sector};
pub use cyclo::{CycloError, Cyclotomic};
pub use fusion::FusionVector;
pub use lattice::{CosetLabel, LatticeData};
pub use smatrix::PartialSMatrix;
