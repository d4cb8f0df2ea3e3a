use num_integer::Integer;
use num_traits::{One, Zero};

use super::decomposition::{BorderDecomposition, Summand};
use crate::error::{Error, Result};
use crate::linalg::{rank, Matrix, Scalar, UniPoly};
use crate::poly::{Polynomial, Ring};

/// Points `ℓ_i`, tangent directions `m_i`, a relation `Σ λ_i ℓ_i^d = 0` and multipliers `μ_i`.
#[derive(Clone, Debug)]
pub struct TangentData {
    pub degree: u32,
    pub points: Vec<Vec<Scalar>>,
    pub tangents: Vec<Vec<Scalar>>,
    pub relation: Vec<Scalar>,
    pub multipliers: Vec<Scalar>,
}

impl TangentData {
    /// Data with all multipliers equal to one.
    pub fn new(degree: u32, points: Vec<Vec<Scalar>>, tangents: Vec<Vec<Scalar>>, relation: Vec<Scalar>) -> Self {
        let multipliers = vec![Scalar::one(); points.len()];
        TangentData { degree, points, tangents, relation, multipliers }
    }

    pub fn nvars(&self) -> usize {
        self.points.first().map_or(0, |p| p.len())
    }

    /// `Σ μ_i ℓ_i^{d-1} m_i`.
    pub fn target(&self) -> Polynomial {
        let n = self.nvars();
        let mut acc = Polynomial::zero(Ring::Primal, n);
        for ((l, m), mu) in self.points.iter().zip(&self.tangents).zip(&self.multipliers) {
            if mu.is_zero() || m.iter().all(|c| c.is_zero()) {
                continue;
            }
            let l = Polynomial::linear(Ring::Primal, l);
            let m = Polynomial::linear(Ring::Primal, m);
            acc = acc.add(&l.pow(self.degree - 1).mul(&m).scale(mu));
        }
        acc
    }

    fn check(&self) -> Result<()> {
        let r = self.points.len();
        let n = self.nvars();
        if r == 0 || self.tangents.len() != r || self.relation.len() != r || self.multipliers.len() != r {
            return Err(Error::DimensionMismatch("points, tangents, relation and multipliers differ in length".into()));
        }
        if self.points.iter().chain(&self.tangents).any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("every linear form needs {n} coefficients")));
        }
        if self.degree < 1 {
            return Err(Error::DegreeTooSmall { degree: self.degree, min: 1 });
        }
        for (i, p) in self.points.iter().enumerate() {
            if p.iter().all(|c| c.is_zero()) {
                return Err(Error::ZeroPoint(i));
            }
        }
        for i in 0..r {
            for j in i + 1..r {
                let m = Matrix::from_rows(vec![self.points[i].clone(), self.points[j].clone()], n)?;
                if rank(&m) < 2 {
                    return Err(Error::RepeatedPoint(i, j));
                }
            }
        }
        if let Some(i) = self.relation.iter().position(|l| l.is_zero()) {
            return Err(Error::ZeroLambda(i));
        }
        let mut rel = Polynomial::zero(Ring::Primal, n);
        for (l, lam) in self.points.iter().zip(&self.relation) {
            rel = rel.add(&Polynomial::linear(Ring::Primal, l).pow(self.degree).scale(lam));
        }
        if !rel.is_zero() {
            return Err(Error::RelationNotSatisfied);
        }
        Ok(())
    }
}

/// Summands `λ_i (ℓ_i + t c_i m_i)^d` with `c_i = μ_i / (d λ_i)`, shift one; denominators are
/// moved into the weights so the curves have integer coefficients.
pub fn construct_tangent_decomposition(data: &TangentData) -> Result<BorderDecomposition> {
    data.check()?;
    let d = data.degree;
    let dd = Scalar::from_integer(d.into());
    let mut summands = Vec::with_capacity(data.points.len());
    for i in 0..data.points.len() {
        let lam = &data.relation[i];
        let c = &data.multipliers[i] / (&dd * lam);
        let dir: Vec<Scalar> = data.tangents[i].iter().map(|m| m * &c).collect();
        let den = data.points[i].iter().chain(&dir).fold(num_bigint::BigInt::one(), |a, x| a.lcm(x.denom()));
        let ds = Scalar::from_integer(den.clone());
        let coeffs = data.points[i]
            .iter()
            .zip(&dir)
            .map(|(a, b)| UniPoly::from_coeffs(vec![(a * &ds).to_integer(), (b * &ds).to_integer()]))
            .collect();
        let weight = lam / num_traits::pow::pow(ds, d as usize);
        summands.push(Summand { weight, coeffs });
    }
    BorderDecomposition::new(data.nvars(), d, 1, summands)
}
