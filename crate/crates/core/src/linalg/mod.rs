//! Exact linear algebra over Q and Q(t).

pub mod field;
pub mod limit;
pub mod matrix;
pub mod param;

pub use field::{format_scalar, int, parse_scalar, ratio, Field, Scalar};
pub use limit::{limit_polynomial_rows, limit_subspace, param_rank};
pub use matrix::{determinant, inverse, kernel_basis, rank, rref, solve, ExactMatrix, Matrix, Rref};
pub use param::{ParamScalar, UniPoly};
