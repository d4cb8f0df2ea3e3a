//! Finite commutative algebras, structure tensors, Gorenstein witnesses and the reconstruction of
//! an algebra from a symmetric tensor.

pub mod build;
pub mod finite;
pub mod gorenstein;
pub mod reconstruct;
pub mod tensor;

pub use build::{apolar_algebra, apolar_presentation, quotient_algebra, random_graded_local_algebra, random_smoothable_algebra, ApolarAlgebra, MonomialAlgebra};
pub use finite::{diagonal_algebra, jet_algebra, FiniteAlgebra, Sparse};
pub use gorenstein::{is_gorenstein, pairing_matrix, radical, socle, socle_criterion, symmetrize_structure_tensor, GorensteinWitness};
pub use reconstruct::{
    algebra_from_tensor, format_functional, hessian_witness, verify_multiplication_matrices, IdentityCheck, MultiplicationReport,
    Reconstruction,
};
pub use tensor::{form_tensor, structure_tensor, Tensor};

use num_traits::Zero;

use crate::linalg::Scalar;
use crate::poly::Polynomial;

/// Integer point where a nonzero polynomial does not vanish, found one variable at a time.
///
/// At each step the remaining polynomial is nonzero of degree at most `deg` in the current
/// variable, so one of `0..=deg` keeps it nonzero.
pub(crate) fn nonvanishing_point(p: &Polynomial) -> Vec<Scalar> {
    assert!(!p.is_zero());
    let n = p.nvars();
    let deg = p.degree().unwrap_or(0) as i64;
    let mut point = Vec::with_capacity(n);
    let mut cur = p.clone();
    for i in 0..n {
        let v = (0..=deg)
            .map(|v| Scalar::from_integer(v.into()))
            .find(|v| {
                let images: Vec<Polynomial> = (0..n)
                    .map(|j| if j == i { Polynomial::constant(p.ring(), n, v.clone()) } else { Polynomial::var(p.ring(), n, j) })
                    .collect();
                !cur.substitute(&images).is_zero()
            })
            .expect("a nonzero polynomial has few roots");
        let images: Vec<Polynomial> =
            (0..n).map(|j| if j == i { Polynomial::constant(p.ring(), n, v.clone()) } else { Polynomial::var(p.ring(), n, j) }).collect();
        cur = cur.substitute(&images);
        point.push(v);
    }
    debug_assert!(!cur.is_zero() && !Scalar::is_zero(&p.eval(&point)));
    point
}
