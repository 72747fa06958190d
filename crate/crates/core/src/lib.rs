//! Invariants for braid-generated link families: multivariable Alexander
//! polynomials, Seiberg–Witten basic-class counts of link surgery manifolds,
//! surgery slopes and torus classes, and finite-quotient signatures of
//! surgery-quotient groups.

pub mod alexander;
pub mod braid;
pub mod error;
pub mod fox;
pub mod laurent;
pub mod quotients;
pub mod report;
pub mod surgery;
pub mod swcount;

pub use error::{Error, Result};
pub use laurent::{LaurentPoly, Monomial, PolyMatrix};
