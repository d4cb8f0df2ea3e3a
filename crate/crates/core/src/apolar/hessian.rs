use num_traits::Zero;
use serde::Serialize;

use super::annihilator::annihilator_generators;
use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix, Scalar};
use crate::poly::{apply_dual, det_bareiss, Form, Monomial, MonomialOrder, Polynomial, Ring};
use crate::random::{random_point, rng};

/// How determinant vanishing is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HessianMode {
    /// Symbolic fraction-free expansion.
    Exact,
    /// Evaluation at three random points with coordinates in `[0, 2^64)`.
    Probabilistic { seed: u64 },
}

pub const SAMPLES: usize = 3;

/// Outcome of a (higher) Hessian test.
#[derive(Clone, Debug, Serialize)]
pub struct HessianStatus {
    pub vanishes: bool,
    pub exact: bool,
    pub matrix_size: usize,
    /// Degree bound of the determinant used for the Schwartz–Zippel estimate.
    pub degree_bound: usize,
    pub samples: usize,
    /// Upper bound on the probability that a nonzero determinant was reported as vanishing.
    pub failure_bound: f64,
    #[serde(skip)]
    pub determinant: Option<Polynomial>,
}

/// Matrix of second partial derivatives.
pub fn hessian_matrix(f: &Form) -> Vec<Vec<Polynomial>> {
    let n = f.nvars();
    let first: Vec<Polynomial> = (0..n).map(|i| f.poly().derivative(i)).collect();
    (0..n).map(|i| (0..n).map(|j| first[i].derivative(j)).collect()).collect()
}

fn eval_matrix(m: &[Vec<Polynomial>], p: &[Scalar]) -> Matrix<Scalar> {
    let rows = m.iter().map(|r| r.iter().map(|e| e.eval(p)).collect()).collect();
    Matrix::from_rows(rows, m.len()).expect("square")
}

/// Decides whether `det m` is the zero polynomial; `entry_degree` bounds the entry degrees.
pub(crate) fn det_vanishes(m: &[Vec<Polynomial>], nvars: usize, entry_degree: usize, mode: HessianMode) -> HessianStatus {
    let size = m.len();
    let degree_bound = size * entry_degree;
    match mode {
        HessianMode::Exact => {
            let det = if size == 0 { Polynomial::one(Ring::Primal, nvars) } else { det_bareiss(m) };
            HessianStatus {
                vanishes: det.is_zero(),
                exact: true,
                matrix_size: size,
                degree_bound,
                samples: 0,
                failure_bound: 0.0,
                determinant: Some(det),
            }
        }
        HessianMode::Probabilistic { seed } => {
            let mut r = rng(seed);
            let mut samples = 0;
            let mut vanishes = true;
            if size > 0 {
                for _ in 0..SAMPLES {
                    samples += 1;
                    let p = random_point(&mut r, nvars);
                    let det = determinant(&eval_matrix(m, &p)).expect("square");
                    if !det.is_zero() {
                        vanishes = false;
                        break;
                    }
                }
            } else {
                vanishes = false;
            }
            // a constant determinant is decided by a single evaluation
            let exact = !vanishes || degree_bound == 0;
            let failure_bound = if exact { 0.0 } else { (degree_bound as f64 / 2f64.powi(64)).powi(samples as i32) };
            HessianStatus { vanishes, exact, matrix_size: size, degree_bound, samples, failure_bound, determinant: None }
        }
    }
}

/// Whether `det Hess(F)` vanishes identically.
pub fn hessian_vanishes(f: &Form, mode: HessianMode) -> Result<HessianStatus> {
    let d = f.degree();
    if d < 2 {
        return Err(Error::DegreeTooSmall { degree: d, min: 2 });
    }
    let h = hessian_matrix(f);
    Ok(det_vanishes(&h, f.nvars(), (d - 2) as usize, mode))
}

/// Degree-lex monomial basis of `(T/Ann(F))_k`.
pub fn quotient_basis(f: &Form, k: u32) -> Vec<Monomial> {
    let ann = annihilator_generators(f);
    let mut b = ann.standard_monomials(k);
    b.sort_by(|x, y| MonomialOrder::Deglex.cmp(y, x));
    b
}

/// The matrix `(α_i α_j ∘ F)` for the degree-lex basis of `(T/Ann(F))_k`.
pub fn higher_hessian_matrix(f: &Form, k: u32) -> Result<Vec<Vec<Polynomial>>> {
    let d = f.degree();
    if k < 1 || k > d / 2 {
        return Err(Error::KOutOfRange { k: k as usize, max: (d / 2) as usize });
    }
    let basis = quotient_basis(f, k);
    let mut m = Vec::with_capacity(basis.len());
    for a in &basis {
        let mut row = Vec::with_capacity(basis.len());
        for b in &basis {
            let op = Polynomial::monomial(Ring::Dual, a.mul(b), Scalar::from_integer(1.into()));
            row.push(apply_dual(&op, f.poly())?);
        }
        m.push(row);
    }
    Ok(m)
}

/// Whether `Hess^k(F)` vanishes identically.
pub fn higher_hessian_vanishes(f: &Form, k: u32, mode: HessianMode) -> Result<HessianStatus> {
    let m = higher_hessian_matrix(f, k)?;
    Ok(det_vanishes(&m, f.nvars(), (f.degree() - 2 * k) as usize, mode))
}

/// The strong Lefschetz property, with the per-`k` statuses.
pub fn has_slp(f: &Form, mode: HessianMode) -> (bool, Vec<(u32, HessianStatus)>) {
    let mut table = Vec::new();
    let mut ok = true;
    for k in 1..=f.degree() / 2 {
        let s = higher_hessian_vanishes(f, k, mode).expect("k in range");
        if s.vanishes {
            ok = false;
        }
        table.push((k, s));
    }
    (ok, table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_and_jet() {
        let f = Form::parse("x0^3 + x1^3 + x2^3").unwrap();
        let s = hessian_vanishes(&f, HessianMode::Exact).unwrap();
        assert!(!s.vanishes);
        assert_eq!(s.determinant.unwrap().to_string(), "216*x0*x1*x2");
        let p = hessian_vanishes(&f, HessianMode::Probabilistic { seed: 1 }).unwrap();
        assert!(!p.vanishes && p.exact);
        let lin = Form::parse("x0 + x1").unwrap();
        assert!(matches!(hessian_vanishes(&lin, HessianMode::Exact), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn perazzo_vanishes() {
        let f = Form::parse("x0*x1^2 + x1*x2*x4 + x3*x4^2").unwrap();
        assert!(hessian_vanishes(&f, HessianMode::Exact).unwrap().vanishes);
        let p = hessian_vanishes(&f, HessianMode::Probabilistic { seed: 7 }).unwrap();
        assert!(p.vanishes);
        assert!(p.failure_bound < 2f64.powi(-40));
    }
}
