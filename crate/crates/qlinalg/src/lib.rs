//! Exact linear algebra over the rationals.
//!
//! Everything here works with arbitrary-precision rationals; there is no
//! floating point anywhere. The toolkit covers what the Lie-algebra layer
//! needs: row reduction, kernels and subspace arithmetic, characteristic and
//! minimal polynomials, Sylvester inertia of symmetric forms, and univariate
//! polynomial tools (squarefree tests, factorization over `Q`, Sturm root
//! counting and the root-squaring transform).

mod error;
mod factor;
mod matrix;
mod poly;
mod rational;
mod sturm;
mod subspace;

pub use error::LinalgError;
pub use factor::{factor_rational, Factorization};
pub use matrix::{Inertia, Matrix};
pub use poly::Polynomial;
pub use rational::{int, parse_rational, primitive_integer_vector, rat, Rational};
pub use sturm::{sturm_count, Bound};
pub use subspace::Subspace;

pub type Result<T, E = LinalgError> = std::result::Result<T, E>;
