//! Two-qubit systems in the Dirac gamma-matrix representation.
//!
//! The sixteen products of Pauli matrices `σa ⊗ σb` are relabelled as the
//! Dirac basis `{I, γμ, γ5, iγμγν, iγμγ5}`. On top of that basis the crate
//! builds the T/C/P operators, Bell and singlet–triplet states, general
//! two-qubit density matrices and a handful of logic gates, and
//! [`verify`] checks the identities that tie them together.
//!
//! Basis order is `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩` with qubit A as the left
//! Kronecker factor.

pub mod bell;
pub mod density;
pub mod dirac;
pub mod error;
pub mod gates;
pub mod io;
pub mod linalg;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
