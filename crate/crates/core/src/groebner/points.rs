use num_traits::Zero;

use super::extract::GeneratorBuilder;
use super::hilbert::constant_tail;
use super::basis::buchberger;
use super::ideal::GradedIdeal;
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix, Scalar};
use crate::poly::{Monomial, MonomialOrder};

fn eval_monomial(m: &Monomial, p: &[Scalar]) -> Scalar {
    let mut v = Scalar::from_integer(1.into());
    for i in m.support() {
        v *= num_traits::pow::pow(p[i].clone(), m.exp(i) as usize);
    }
    v
}

/// Checks that no point is zero and no two are proportional.
pub fn check_points(points: &[Vec<Scalar>]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::ZeroPoint(i));
        }
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let m = Matrix::from_rows(vec![points[i].clone(), points[j].clone()], points[i].len())?;
            if rank(&m) < 2 {
                return Err(Error::DuplicatePoint(i, j));
            }
        }
    }
    Ok(())
}

/// Evaluation matrix: one row per point, one column per monomial.
pub fn evaluation_matrix(points: &[Vec<Scalar>], cols: &[Monomial]) -> Matrix<Scalar> {
    let rows = points.iter().map(|p| cols.iter().map(|m| eval_monomial(m, p)).collect()).collect();
    Matrix::from_rows(rows, cols.len()).expect("shape")
}

/// Saturated radical ideal of a finite set of projective points (coordinates in the x-space).
pub fn ideal_of_points(points: &[Vec<Scalar>]) -> Result<GradedIdeal> {
    let Some(first) = points.first() else {
        return Err(Error::DimensionMismatch("no points".into()));
    };
    let n = first.len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::DimensionMismatch("points of different lengths".into()));
    }
    check_points(points)?;
    let r = points.len();
    let mut b = GeneratorBuilder::new(n);
    let mut k = 1u32;
    loop {
        let cols = b.standard(k);
        let map = evaluation_matrix(points, &cols);
        let new = b.add_kernel(&cols, &map);
        let hf = cols.len() - new;
        if hf == r {
            let gb = buchberger(b.generators(), n, MonomialOrder::Grevlex);
            let num = super::hilbert::hilbert_numerator(gb.leading_monomials());
            if let Some((len, start)) = constant_tail(&num, n) {
                if len == r && start as u32 <= k {
                    return Ok(GradedIdeal::from_basis(gb));
                }
            }
        }
        k += 1;
    }
}
