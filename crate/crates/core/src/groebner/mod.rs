//! Gröbner bases, Hilbert functions, colon ideals and saturation for homogeneous ideals in the dual ring.

pub mod basis;
pub mod engine;
pub(crate) mod extract;
pub mod hilbert;
pub mod ideal;
mod ipoly;
pub mod points;
pub mod saturation;

pub use basis::{buchberger, buchberger_truncated, standard_monomials, GroebnerBasis};
pub use engine::Engine;
pub use ideal::GradedIdeal;
pub use points::{evaluation_matrix, ideal_of_points};
pub use saturation::{colon_ideal, contains_linear_form, intersect, is_saturated, iterated_colon, saturate_by, saturate_by_variable, saturation};
