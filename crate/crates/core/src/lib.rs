//! Exact computer algebra for `U(sl2)`, the universal Hahn algebra and
//! hypercube Terwilliger algebras.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod freealg;
pub mod hahn;
pub mod linalg;
pub mod report;
pub mod repr;
pub mod sample;
pub mod terwilliger;
pub mod usl2;

pub use freealg::{FreePoly, MembershipCertificate, Word};
pub use linalg::{Rational, SparseMatrix, SparseVec};
pub use usl2::Usl2Element;
