//! A_α spectra, energies and energy bounds for finite simple graphs.
//!
//! The A_α matrix of a graph is `α·D + (1 − α)·A`, interpolating between the
//! adjacency matrix (α = 0) and the degree diagonal (α = 1). This crate
//! builds the matrices, computes their spectra with a cyclic Jacobi solver,
//! and evaluates a family of upper/lower bounds and inter-energy relations
//! for the A_α-energy `Σ|ρᵢ − 2αm/n|`.
//!
//! The crate is `no_std` and only needs `alloc`. Parsing, file formats,
//! corpus sweeps and the command line live in the `aenergy` crate.
#![no_std]

extern crate alloc;

pub mod bounds;
pub mod closed_form;
pub mod corpus;
pub mod eig;
mod error;
pub mod family;
pub mod graph;
pub mod rank;
pub mod spectra;

pub use bounds::{BoundId, BoundResult, Evaluation, GraphFacts, Inapplicable, RelationResult, Side, Verdict};
pub use closed_form::closed_form_spectrum;
pub use eig::{eigenvalues, spectral_extremes, Spectrum, SymmetricMatrix};
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Connectivity, DegreeSummary, Graph};
pub use rank::adjacency_rank;
pub use spectra::{EnergyReport, MatrixKind};
