//! Border rank decompositions, tangent constructions and limiting schemes.

pub mod decomposition;
pub mod limit;
pub mod tangent;

pub use decomposition::{constant_decomposition, verify_border_decomposition, BorderDecomposition, Summand, VerificationReport};
pub use limit::{limit_ideal_family, limiting_scheme_ideal, LimitIdeal, LimitingSchemeResult};
pub use tangent::{construct_tangent_decomposition, TangentData};
