//! Essential signatures for irreducible so(8) modules.
//!
//! The crate computes, in exact arithmetic, the essential-signature basis of
//! V(λ) from explicit representation matrices, reconstructs the cone spanned
//! by the fundamental essential signatures, and checks the lattice-point
//! description of the basis against the Weyl dimension formula.

pub mod cone;
pub mod dd;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod models;
pub mod roots;
pub mod signatures;
pub mod tables;

pub use error::{Error, Result};
pub use roots::{DomWeight, EpsWeight};
pub use signatures::Signature;
