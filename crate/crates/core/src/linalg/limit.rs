use super::field::{Field, Scalar};
use super::matrix::{kernel_basis, rref_rows, Matrix};
use num_bigint::BigInt;
use num_integer::Integer;

use super::param::{ParamScalar, UniPoly};
use crate::error::{Error, Result};

/// Limit as `t -> 0` of the row space of a matrix over Q(t).
///
/// Rows are reduced over Q(t) and rescaled to valuation zero. When their
/// values at `t = 0` are dependent, a dependent combination is divided by the
/// largest possible power of `t` and swapped in; each such step lowers the
/// valuation of the wedge of the rows, so the loop terminates.
pub fn limit_subspace(m: &Matrix<ParamScalar>) -> Result<Matrix<Scalar>> {
    let (rows, _) = rref_rows(m.to_rows(), m.cols());
    let expected = rows.len();
    let mut rows: Vec<Vec<ParamScalar>> = rows.into_iter().map(normalize_row).collect();
    let cols = m.cols();
    let budget = 10_000usize;
    for _ in 0..budget {
        let at_zero: Vec<Vec<Scalar>> = rows.iter().map(|r| eval_row(r)).collect();
        // relations among the rows at t = 0 are the kernel of the transpose
        let mt = Matrix::from_rows(at_zero.clone(), cols)?.transpose();
        let rel = kernel_basis(&mt);
        let Some(c) = rel.into_iter().next() else {
            let (basis, _) = rref_rows(at_zero, cols);
            if basis.len() != expected {
                return Err(Error::DimensionDrop { expected, got: basis.len() });
            }
            return Matrix::from_rows(basis, cols);
        };
        let j = c.iter().rposition(|x| !x.is_zero()).expect("nonzero relation");
        let mut combo = vec![ParamScalar::zero(); cols];
        for (ci, row) in c.iter().zip(&rows) {
            if ci.is_zero() {
                continue;
            }
            for (acc, x) in combo.iter_mut().zip(row) {
                if !x.is_zero() {
                    *acc = acc.add(&x.scale(ci));
                }
            }
        }
        if combo.iter().all(|x| x.is_zero()) {
            return Err(Error::DimensionDrop { expected, got: expected - 1 });
        }
        rows[j] = normalize_row(combo);
    }
    Err(Error::DimensionDrop { expected, got: 0 })
}

fn normalize_row(row: Vec<ParamScalar>) -> Vec<ParamScalar> {
    let v = row.iter().filter_map(|x| x.valuation()).min().unwrap_or(0);
    if v == 0 {
        row
    } else {
        row.into_iter().map(|x| x.mul_t_pow(-v)).collect()
    }
}

fn eval_row(row: &[ParamScalar]) -> Vec<Scalar> {
    row.iter().map(|x| x.at_zero().expect("row normalized to nonnegative valuation")).collect()
}

/// Rank over Q(t).
pub fn param_rank(m: &Matrix<ParamScalar>) -> usize {
    rref_rows(m.to_rows(), m.cols()).1.len()
}

/// Limit as `t -> 0` of the Q(t)-span of rows with entries in Z[t].
///
/// Same lattice step as [`limit_subspace`], kept inside Z[t]; rows that turn out
/// to be dependent over Q(t) are dropped. Returns a row-reduced basis.
pub fn limit_polynomial_rows(rows: Vec<Vec<UniPoly>>, cols: usize) -> Result<Matrix<Scalar>> {
    let mut rows: Vec<Vec<UniPoly>> = rows.into_iter().filter_map(normalize_poly_row).collect();
    let start = rows.len();
    for _ in 0..10_000usize {
        let at_zero: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|x| Scalar::from_integer(x.coeff(0))).collect()).collect();
        let Some(c) = first_relation(&at_zero) else {
            let (basis, _) = rref_rows(at_zero, cols);
            return Matrix::from_rows(basis, cols);
        };
        let den = c.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let j = c.iter().rposition(|x| !x.is_zero()).expect("nonzero relation");
        let mut combo = vec![UniPoly::zero(); cols];
        for (ci, row) in c.iter().zip(&rows) {
            if ci.is_zero() {
                continue;
            }
            let k = (ci * Scalar::from_integer(den.clone())).to_integer();
            for (acc, x) in combo.iter_mut().zip(row) {
                if !x.is_zero() {
                    *acc = acc.add(&x.scale(&k));
                }
            }
        }
        match normalize_poly_row(combo) {
            Some(r) => rows[j] = r,
            None => {
                rows.remove(j);
            }
        }
    }
    Err(Error::DimensionDrop { expected: start, got: 0 })
}

fn normalize_poly_row(row: Vec<UniPoly>) -> Option<Vec<UniPoly>> {
    let v = row.iter().filter_map(|x| x.valuation()).min()?;
    let g = row.iter().fold(BigInt::from(0), |acc, x| acc.gcd(&x.content()));
    Some(row.into_iter().map(|x| x.shift_down(v).div_scalar(&g)).collect())
}

/// A nontrivial relation `Σ c_i row_i = 0`, if any, by elimination with tracked combinations.
fn first_relation(rows: &[Vec<Scalar>]) -> Option<Vec<Scalar>> {
    let r = rows.len();
    let mut work: Vec<(Vec<Scalar>, Vec<Scalar>)> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut e = vec![<Scalar as Field>::zero(); r];
            e[i] = <Scalar as Field>::one();
            (row.clone(), e)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for i in 0..r {
        for &(pi, pc) in &pivots {
            let f = work[i].0[pc].clone();
            if f.is_zero() {
                continue;
            }
            let (prow, pcomb) = (work[pi].0.clone(), work[pi].1.clone());
            for (a, b) in work[i].0.iter_mut().zip(&prow) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            for (a, b) in work[i].1.iter_mut().zip(&pcomb) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        match work[i].0.iter().position(|x| !x.is_zero()) {
            None => return Some(work[i].1.clone()),
            Some(c) => {
                let inv = <Scalar as Field>::one() / &work[i].0[c];
                let (row, comb) = &mut work[i];
                for x in row.iter_mut().chain(comb.iter_mut()) {
                    *x *= &inv;
                }
                pivots.push((i, c));
            }
        }
    }
    None
}
