//! Reports and verification for the Jacobi spectra of the cubic focal
//! manifolds, on top of `focal-core`.

pub mod record;
pub mod render;
pub mod verify;
