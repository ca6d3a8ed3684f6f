//! Exact computations on real Lie algebras with pairs of commuting
//! involutions: quad decompositions, dissecting triples, Cartan and compact
//! duals, and a brute-force classification harness over `so(p,q)`.

pub mod catalog;
pub mod duality;
mod error;
pub mod ideals;
pub mod involution;
mod lie;
pub mod verify;

pub use error::{CoreError, Result};
pub use involution::{Automorphism, CommutingTriple, ElementType, QuadDecomposition};
pub use lie::{Element, LieAlgebra, Realization};
pub use verify::{TripleRecord, VerificationReport};

pub use qlinalg::{Matrix, Polynomial, Rational, Subspace};
