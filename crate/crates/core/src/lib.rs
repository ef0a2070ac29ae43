//! Exact computer algebra for Macdonald polynomials and related constructions.

pub mod qt;
pub mod tableaux;
pub mod hecke;
pub mod affine;
pub mod clifford;
pub mod zeta;
pub mod cohomology;
pub mod verify;
