//! The explicit series `G_d` and `F_n`, their decompositions and ideals, and the example catalog.

pub mod catalog;
pub mod chain;
pub mod cubics;
pub mod gd;
pub mod vsp;

pub use catalog::{catalog_names, named_example, NamedExample};
pub use chain::{chain_ideal, chain_lines};
pub use cubics::{fn_form, fn_point_configuration, ConfigPoint, PointConfiguration};
pub use gd::{gd_form, gd_tangent_data};
pub use vsp::{gd_vsp_check, gd_vsp_ideal, generic_hf, VspCheck};

use std::collections::HashSet;

use crate::linalg::{solve, Matrix, Scalar};
use crate::poly::{Monomial, Polynomial};

/// Coordinates of each target in terms of `basis` (which must span them).
pub(crate) fn express(targets: &[Polynomial], basis: &[Polynomial]) -> Vec<Vec<Scalar>> {
    let mut seen = HashSet::new();
    let monos: Vec<Monomial> = basis
        .iter()
        .chain(targets)
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.clone()))
        .filter(|m| seen.insert(m.clone()))
        .collect();
    let rows = monos.iter().map(|m| basis.iter().map(|b| b.coeff(m)).collect()).collect();
    let a = Matrix::from_rows(rows, basis.len()).expect("shape");
    targets
        .iter()
        .map(|t| {
            let rhs: Vec<Scalar> = monos.iter().map(|m| t.coeff(m)).collect();
            solve(&a, &rhs).expect("target lies in the span")
        })
        .collect()
}
