//! Hermitian-adjacency matrices and Hermitian energy of mixed graphs.
//!
//! A mixed graph assigns each edge of a simple undirected graph one of three
//! states: undirected, or an arc in either direction. Its Hermitian-adjacency
//! matrix H has entry 1 for an undirected edge and i / -i for an arc and its
//! reverse; the Hermitian energy is the sum of the absolute eigenvalues of H.
//! A k-regular mixed graph on n vertices attaining the bound n*sqrt(k) is
//! optimum, which happens exactly when H^2 = k*I, a purely algebraic
//! criterion this crate checks in exact Gaussian-integer arithmetic.
//!
//! The crate provides:
//!
//! - [`graph`]: simple graphs, generators (complete, cycle, hypercube,
//!   connected cubic graphs up to 10 vertices), graph6 I/O, canonical forms
//!   and automorphism groups for small orders;
//! - [`mixed`]: mixed graphs, JSON I/O, arc reversal and named fixtures;
//! - [`hermitian`]: exact H, H^2, the optimality criterion, the skew matrix
//!   of an oriented graph and the even-common-neighborhood parity filter;
//! - [`spectra`]: numeric eigenvalues through a real-symmetric embedding,
//!   Hermitian energy and the bound gap;
//! - [`cycles`]: 4-cycle holonomy and the three admissible mixed 4-cycle
//!   types;
//! - [`switching`]: switching functions, conjugation, a linear-time
//!   equivalence solver and class partitioning;
//! - [`hypercube`]: the recursive optimum orientation of Q_k, its exact
//!   verification, and the reduction of any optimum orientation onto it;
//! - [`census`]: exhaustive/pruned enumeration of optimum assignments with
//!   deterministic parallel splitting and the classification reports.

pub mod census;
pub mod cli;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod hermitian;
pub mod hypercube;
pub mod mixed;
pub mod spectra;
pub mod switching;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hermitian::{GaussianInt, HermitianMatrix};
pub use mixed::{EdgeState, MixedGraph};
